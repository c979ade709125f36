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

#include "graphemb/alias.hpp"
#include "graphemb/embedding.hpp"
#include "graphemb/graph.hpp"
#include "graphemb/random.hpp"
#include "graphemb/walks.hpp"

namespace graphemb {

// Noise distribution for negative sampling: P(v) proportional to
// count(v)^exponent. exponent 0 is uniform. When every count^exponent is
// zero the distribution falls back to uniform.
class NoiseDistribution {
 public:
  NoiseDistribution() = default;
  // keys fixes the internal table order (nodes sorted by key) so that draws
  // follow nodes, not dense ids.
  NoiseDistribution(std::span<const double> counts, double exponent,
                    std::span<const std::uint64_t> keys = {});

  NodeId sample(Rng& rng) const { return order_[table_.sample(rng)]; }
  std::vector<double> probabilities() const;

 private:
  AliasTable table_;
  std::vector<NodeId> order_;
};

// k draws proportional to weighted_degree^beta.
std::vector<NodeId> negative_sample(const Graph& graph, double beta, int k, Rng& rng);

// How negatives enter the pair loss. kStandard is -log sigmoid(-u.n); kAsPrinted
// is -log sigmoid(+u.n) subtracted, which is unbounded below and kept only
// for comparison.
enum class NegativeTerm { kStandard, kAsPrinted };

struct PairLoss {
  double loss{0.0};
  std::vector<double> grad_center;
  std::vector<double> grad_context;
  std::vector<std::vector<double>> grad_negatives;
};

// Skip-gram negative-sampling loss of one (center, context) pair:
// -log s(u.v) - sum_i log s(-u.n_i).
PairLoss sgns_pair_loss(std::span<const double> center, std::span<const double> context,
                        std::span<const std::span<const double>> negatives,
                        NegativeTerm term = NegativeTerm::kStandard);

struct SgnsConfig {
  std::size_t dim{128};
  int epochs{5};
  double learning_rate{0.025};
  bool linear_decay{true};
  int negatives{5};
  double noise_exponent{0.75};
  int window{10};
  std::uint64_t seed{1};
  int threads{1};  // 1 = deterministic; >1 = lock-free parallel updates
  NegativeTerm negative_term{NegativeTerm::kStandard};

  void validate() const;
};

// Called after every epoch with the epoch index (1-based).
using EpochCallback = std::function<void(int, const PointEmbedding&)>;

// Skip-gram with negative sampling over every context pair of the corpus.
// The noise distribution uses corpus occurrence counts. keys (optional)
// identify nodes for initialization and noise-table order.
PointEmbedding train_skipgram(const WalkCorpus& corpus, std::size_t node_count, const SgnsConfig& config,
                              std::span<const std::uint64_t> keys = {},
                              const EpochCallback& on_epoch = {});

}  // namespace graphemb
