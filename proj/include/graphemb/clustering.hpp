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

#include "graphemb/encoder.hpp"

namespace graphemb {

struct KMeansResult {
  std::vector<int> assignments;
  RowMatrix centroids;
  double inertia{0.0};
  int iterations{0};
};

// Lloyd iterations from k-means++ seeding; the best of `restarts` runs by
// inertia is returned. Throws when k exceeds the number of points.
KMeansResult kmeans(const RowMatrix& points, int k, std::uint64_t seed, int max_iter = 300, int restarts = 10);

// Sum of squared distances of every point to the mean of its cluster.
double inertia(const RowMatrix& points, std::span<const int> assignments);

// Mean silhouette (b - a) / max(a, b) over all points; points in singleton
// clusters score 0. Needs at least two clusters.
double silhouette(const RowMatrix& points, std::span<const int> assignments);

struct AgreementScores {
  double nmi{0.0};
  double accuracy{0.0};
};

// Normalized mutual information (arithmetic-mean normalization) and the
// accuracy under the best one-to-one relabeling of predicted clusters.
AgreementScores nmi_and_accuracy(std::span<const int> predicted, std::span<const int> truth);

// Maximum-weight assignment on a rows x cols matrix (rows <= cols or not).
// Returns, for each row, the matched column or -1.
std::vector<int> max_weight_matching(const std::vector<std::vector<double>>& weights);

}  // namespace graphemb
