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
#include <functional>
#include <span>
#include <vector>

#include "graphemb/encoder.hpp"
#include "graphemb/gaussian.hpp"
#include "graphemb/graph.hpp"
#include "graphemb/triplets.hpp"

namespace graphemb {

struct G2gConfig {
  std::size_t dim{128};  // L; mu and sigma are L/2 wide
  std::vector<std::size_t> hidden{512};
  int max_hop{2};
  int epochs{200};
  double learning_rate{1e-3};
  int per_anchor{1};
  std::uint64_t seed{1};

  void validate() const;
};

struct G2gModel {
  EncoderParams params;
  GaussianEmbedding embedding;
  EmbeddingHistory history;
  std::vector<double> epoch_loss;
};

// Energy between an anchor and another node: KL(P_other || P_anchor).
double g2g_energy(const GaussianEmbedding& embedding, NodeId anchor, NodeId other);

// Fraction of triplets with E(anchor, positive) < E(anchor, negative).
double ranking_satisfaction(const GaussianEmbedding& embedding, std::span<const Triplet> triplets);

GaussianEmbedding to_gaussian(const Encoding& encoding);

struct G2gLoss {
  double loss{0.0};
  EncoderParams grad;
};

// Square-exponential ranking loss over the triplets and its gradient
// w.r.t. every encoder parameter.
G2gLoss g2g_loss(const EncoderParams& params, const AttributeMatrix& x, std::span<const Triplet> triplets);

using G2gEpochCallback = std::function<void(int, const G2gModel&)>;

// Triplets are resampled every epoch; one Adam step per epoch. Nodes
// without attributes get one-hot identity features.
G2gModel train_g2g(const Graph& graph, const G2gConfig& config, const G2gEpochCallback& on_epoch = {});

}  // namespace graphemb
