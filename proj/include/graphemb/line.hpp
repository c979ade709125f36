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

#include <cstdint>
#include <span>
#include <vector>

#include "graphemb/embedding.hpp"
#include "graphemb/graph.hpp"

namespace graphemb {

// Exact proximity loss over an edge batch with gradients w.r.t. the center
// (Z) and context (Z') tables, laid out like PointEmbedding.
struct LineLoss {
  double loss{0.0};
  std::vector<double> grad_center;
  std::vector<double> grad_context;
};

// -sum_batch w_ij log p1(i, j), p1 = exp(z_i.z_j) / sum_{(s,t) in E} exp(z_s.z_t)
// with the normalizer running over the graph's logical edge set.
// Undirected graphs only.
LineLoss line_first_order_loss(const Graph& graph, const PointEmbedding& embedding,
                               std::span<const Edge> batch);

// -sum_batch w_ij log p2(j | i), p2 = exp(z'_j.z_i) / sum_{k in V} exp(z'_k.z_i).
LineLoss line_second_order_loss(const Graph& graph, const PointEmbedding& embedding,
                                std::span<const Edge> batch);

// Every arc of the graph (both orientations of undirected edges).
std::vector<Edge> graph_arcs(const Graph& graph);

struct LineConfig {
  std::size_t dim{128};
  int epochs{10};  // one epoch = arc_count edge samples
  double learning_rate{0.025};
  int negatives{5};
  double noise_exponent{0.75};
  std::uint64_t seed{1};
  int threads{1};

  void validate() const;
};

// Edge-sampled SGD with negative sampling. Arcs are drawn proportional to
// weight. order 1 uses Z for both endpoints; order 2 uses Z' for the target.
PointEmbedding train_line(const Graph& graph, int order, const LineConfig& config);

}  // namespace graphemb
