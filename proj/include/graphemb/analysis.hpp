//  Copyright 2026 The graphemb Authors. All Rights Reserved.
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graphemb/dynamic.hpp"
#include "graphemb/encoder.hpp"
#include "graphemb/gaussian.hpp"

namespace graphemb {

struct Projection {
  RowMatrix coordinates;          // n x out_dim
  std::vector<double> variances;  // variance captured by each output axis
};

// Centered data projected onto the leading principal axes. Each axis is
// signed so that its largest-magnitude loading is positive.
Projection pca_project(const RowMatrix& vectors, std::size_t out_dim = 2);

struct UncertaintyCurves {
  std::vector<std::vector<double>> curves;  // dims x epochs
  std::vector<double> final_sigma;          // per dim, last epoch
};

UncertaintyCurves uncertainty_per_dimension(const EmbeddingHistory& history);

struct IntrinsicDimension {
  std::size_t effective_dims{0};
  double separation_ratio{1.0};  // high-group mean / low-group mean
};

// Optimal two-group split of log sigma (minimum within-group squared
// error); the effective dimension is the size of the low-sigma group.
IntrinsicDimension intrinsic_dimension_estimate(std::span<const double> sigma);

struct StabilityResult {
  double constant{0.0};
  std::vector<double> ratios;  // one per transition t -> t+1
};

// Relative embedding change over relative adjacency change for one
// transition. All four matrices are already restricted to the earlier
// snapshot's nodes.
double relative_stability(const RowMatrix& f_t, const RowMatrix& f_next, const RowMatrix& s_t,
                          const RowMatrix& s_next);

// Largest spread between per-transition ratios.
double stability_constant_from_ratios(std::span<const double> ratios);

// embeddings[t] has one row per id in snapshots.ids. Every transition is
// restricted to nodes present in the earlier snapshot; nodes that appear
// only later are ignored for that transition.
StabilityResult stability_constant(const SnapshotSequence& snapshots, std::span<const RowMatrix> embeddings);

// Dense adjacency of g restricted (rows and columns) to `keep`, in order.
RowMatrix restricted_adjacency(const Graph& g, std::span<const NodeId> keep);

}  // namespace graphemb
