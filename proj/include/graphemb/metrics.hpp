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

enum class Similarity { kDot, kCosine, kEuclidean };

// dot = z_j.z_i, cosine = dot / (|z_i||z_j|), euclidean = |z_i - z_j|.
// Cosine of a zero vector throws.
double similarity(std::span<const double> zi, std::span<const double> zj, Similarity kind);

struct LabeledScore {
  int label{0};  // 1 = edge, 0 = non-edge
  double score{0.0};
};

struct LinkPredictionScores {
  double auc{0.0};
  double ap{0.0};
};

// ROC AUC with ties counted one half, and step-interpolated average
// precision. Both classes must be present.
LinkPredictionScores link_prediction(std::span<const LabeledScore> scored);

struct NodeClassificationConfig {
  double train_fraction{0.5};
  int repeats{10};
  std::uint64_t seed{1};
  bool normalize{true};  // scale each feature row to unit L2 norm
  double l2{1e-4};
  int steps{500};
};

struct ClassificationScores {
  double f1_micro{0.0};
  double f1_macro{0.0};
};

// Multinomial logistic regression (full-batch gradient descent with an L2
// penalty) on a fresh shuffled split per repeat; mean F1 over repeats.
// Rows labeled kUnlabeled are ignored. A split that leaves a class out of
// the training part is redrawn.
ClassificationScores node_classification(const RowMatrix& features, std::span<const int> labels,
                                         const NodeClassificationConfig& config);

// Micro and macro F1 of a single-label prediction. Macro averages over the
// classes that occur in either vector.
ClassificationScores f1_scores(std::span<const int> truth, std::span<const int> predicted);

}  // namespace graphemb
