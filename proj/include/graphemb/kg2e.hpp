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
#include <set>
#include <vector>

#include "graphemb/gaussian.hpp"
#include "graphemb/knowledge.hpp"
#include "graphemb/random.hpp"

namespace graphemb {

struct KgEmbedding {
  GaussianEmbedding entities;
  GaussianEmbedding relations;
  EmbeddingHistory history;  // entity sigmas after each epoch
};

enum class CorruptionMode { kUnif, kBern };
enum class KgEnergy { kKL, kEL };

struct Corruption {
  Triple triple;
  bool replaced_head{false};
};

// Negative triples for ranking losses. unif replaces head or tail with a
// fair coin; bern replaces the head with probability tph / (tph + hpt) of
// the relation (tails-per-head, heads-per-tail). Corruptions that are
// known triples are redrawn up to a bound.
class TripleCorrupter {
 public:
  TripleCorrupter(const KnowledgeTriples& kg, CorruptionMode mode, int max_attempts = 1000);

  double head_probability(NodeId relation) const;
  Corruption corrupt(const Triple& triple, Rng& rng) const;
  bool is_known(const Triple& t) const { return known_.contains(t); }

 private:
  std::size_t entity_count_;
  CorruptionMode mode_;
  int max_attempts_;
  std::set<Triple> known_;
  std::vector<double> head_prob_;
};

Corruption corrupt_triple(const KnowledgeTriples& kg, const Triple& triple, CorruptionMode mode, Rng& rng);

// Energy of (h, r, t): P_e = N(mu_h - mu_t, S_h + S_t) scored against
// P_r = N(mu_r, S_r); kKL is KL(P_e || P_r), kEL is -log EL(P_e, P_r).
double kg2e_energy(const KgEmbedding& model, const Triple& triple, KgEnergy energy);

struct KgRowGrad {
  bool relation{false};
  NodeId row{0};
  std::vector<double> d_mu;
  std::vector<double> d_sigma;
};

struct KgPairLoss {
  double loss{0.0};
  std::vector<KgRowGrad> grads;  // one entry per touched row (rows may repeat)
};

// Margin ranking loss of one (positive, corrupted) pair and its gradient.
KgPairLoss kg2e_pair_loss(const KgEmbedding& model, const Triple& positive, const Triple& negative, double gamma,
                          KgEnergy energy, MarginForm form = MarginForm::kConventional);

struct Kg2eConfig {
  std::size_t dim{50};  // L; mu and sigma are L/2 wide
  double gamma{1.0};
  KgEnergy energy{KgEnergy::kKL};
  CorruptionMode mode{CorruptionMode::kUnif};
  MarginForm margin_form{MarginForm::kConventional};
  int epochs{100};
  double learning_rate{0.01};
  std::uint64_t seed{1};
  double sigma_min{0.05};
  double sigma_max{5.0};

  void validate() const;
};

// SGD over shuffled triples, one corruption per positive; variances are
// clamped to [sigma_min, sigma_max] after every step.
KgEmbedding train_kg2e(const KnowledgeTriples& kg, const Kg2eConfig& config);

}  // namespace graphemb
