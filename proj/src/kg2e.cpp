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

#include "graphemb/kg2e.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "graphemb/error.hpp"

namespace graphemb {

TripleCorrupter::TripleCorrupter(const KnowledgeTriples& kg, CorruptionMode mode, int max_attempts)
    : entity_count_(kg.entities.size()), mode_(mode), max_attempts_(max_attempts) {
  if (kg.triples.empty()) throw ValidationError("cannot corrupt an empty triple store");
  kg.validate();
  known_.insert(kg.triples.begin(), kg.triples.end());

  head_prob_.assign(kg.relations.size(), 0.5);
  if (mode_ == CorruptionMode::kBern) {
    // tails per head and heads per tail, averaged per relation
    std::map<std::pair<NodeId, NodeId>, int> tails_of, heads_of;  // (r, h) -> #t, (r, t) -> #h
    for (const Triple& t : known_) {
      ++tails_of[{t.relation, t.head}];
      ++heads_of[{t.relation, t.tail}];
    }
    std::vector<double> tph_sum(kg.relations.size(), 0.0), tph_n(kg.relations.size(), 0.0);
    std::vector<double> hpt_sum(kg.relations.size(), 0.0), hpt_n(kg.relations.size(), 0.0);
    for (const auto& [key, c] : tails_of) {
      tph_sum[key.first] += c;
      tph_n[key.first] += 1.0;
    }
    for (const auto& [key, c] : heads_of) {
      hpt_sum[key.first] += c;
      hpt_n[key.first] += 1.0;
    }
    for (std::size_t r = 0; r < head_prob_.size(); ++r) {
      if (tph_n[r] == 0.0) continue;
      double tph = tph_sum[r] / tph_n[r];
      double hpt = hpt_sum[r] / hpt_n[r];
      head_prob_[r] = tph / (tph + hpt);
    }
  }
}

double TripleCorrupter::head_probability(NodeId relation) const { return head_prob_.at(relation); }

Corruption TripleCorrupter::corrupt(const Triple& triple, Rng& rng) const {
  if (entity_count_ < 2) throw ValidationError("need at least two entities to corrupt a triple");
  for (int attempt = 0; attempt < max_attempts_; ++attempt) {
    Corruption c{triple, uniform01(rng) < head_prob_.at(triple.relation)};
    auto e = static_cast<NodeId>(uniform_index(rng, entity_count_));
    (c.replaced_head ? c.triple.head : c.triple.tail) = e;
    if (!known_.contains(c.triple)) return c;
  }
  throw ValidationError("could not find an unknown corruption within the retry budget");
}

Corruption corrupt_triple(const KnowledgeTriples& kg, const Triple& triple, CorruptionMode mode, Rng& rng) {
  return TripleCorrupter(kg, mode).corrupt(triple, rng);
}

namespace {

struct EntityPair {
  std::vector<double> mu, sigma;
};

EntityPair difference(const KgEmbedding& m, const Triple& t) {
  const std::size_t n = m.entities.half_dim;
  EntityPair e{std::vector<double>(n), std::vector<double>(n)};
  auto mh = m.entities.mu_row(t.head), mt = m.entities.mu_row(t.tail);
  auto sh = m.entities.sigma_row(t.head), st = m.entities.sigma_row(t.tail);
  for (std::size_t d = 0; d < n; ++d) {
    e.mu[d] = mh[d] - mt[d];
    e.sigma[d] = sh[d] + st[d];
  }
  return e;
}

void check_triple(const KgEmbedding& m, const Triple& t) {
  if (t.head >= m.entities.count || t.tail >= m.entities.count || t.relation >= m.relations.count) {
    throw ValidationError("triple id out of range for the model");
  }
}

EnergyGrad energy_grad(const KgEmbedding& m, const Triple& t, KgEnergy energy) {
  EntityPair e = difference(m, t);
  GaussianView pe{e.mu, e.sigma};
  GaussianView pr = view(m.relations, t.relation);
  return energy == KgEnergy::kKL ? kl_energy_grad(pe, pr) : neg_log_el_energy_grad(pe, pr);
}

void push_grads(std::vector<KgRowGrad>& out, const Triple& t, const EnergyGrad& g, double scale) {
  const std::size_t n = g.d_mu_i.size();
  KgRowGrad head{false, t.head, std::vector<double>(n), std::vector<double>(n)};
  KgRowGrad tail{false, t.tail, std::vector<double>(n), std::vector<double>(n)};
  KgRowGrad rel{true, t.relation, std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t d = 0; d < n; ++d) {
    head.d_mu[d] = scale * g.d_mu_i[d];
    tail.d_mu[d] = -scale * g.d_mu_i[d];
    head.d_sigma[d] = scale * g.d_sigma_i[d];
    tail.d_sigma[d] = scale * g.d_sigma_i[d];
    rel.d_mu[d] = scale * g.d_mu_j[d];
    rel.d_sigma[d] = scale * g.d_sigma_j[d];
  }
  out.push_back(std::move(head));
  out.push_back(std::move(tail));
  out.push_back(std::move(rel));
}

}  // namespace

double kg2e_energy(const KgEmbedding& model, const Triple& triple, KgEnergy energy) {
  check_triple(model, triple);
  EntityPair e = difference(model, triple);
  GaussianView pe{e.mu, e.sigma};
  GaussianView pr = view(model.relations, triple.relation);
  return energy == KgEnergy::kKL ? kl_energy(pe, pr) : neg_log_el_energy(pe, pr);
}

KgPairLoss kg2e_pair_loss(const KgEmbedding& model, const Triple& positive, const Triple& negative, double gamma,
                          KgEnergy energy, MarginForm form) {
  check_triple(model, positive);
  check_triple(model, negative);
  EnergyGrad pos = energy_grad(model, positive, energy);
  EnergyGrad neg = energy_grad(model, negative, energy);
  double p[] = {pos.value};
  double q[] = {neg.value};
  KgPairLoss out;
  out.loss = margin_ranking_loss(p, q, gamma, form);
  MarginSubgradient sg = margin_subgradient(pos.value, neg.value, gamma, form);
  if (sg.d_pos != 0.0) push_grads(out.grads, positive, pos, sg.d_pos);
  if (sg.d_neg != 0.0) push_grads(out.grads, negative, neg, sg.d_neg);
  return out;
}

void Kg2eConfig::validate() const {
  if (dim < 2 || dim % 2 != 0) throw ValidationError("Gaussian embedding dimension L must be even and >= 2");
  if (gamma < 0.0) throw ValidationError("margin must be >= 0");
  if (epochs < 0) throw ValidationError("epochs must be >= 0");
  if (!(learning_rate > 0.0)) throw ValidationError("learning rate must be > 0");
  if (!(sigma_min > 0.0) || sigma_max < sigma_min) throw ValidationError("bad variance clamp range");
}

KgEmbedding train_kg2e(const KnowledgeTriples& kg, const Kg2eConfig& config) {
  config.validate();
  if (kg.triples.empty()) throw ValidationError("cannot train on an empty triple store");
  kg.validate();
  const std::size_t half = config.dim / 2;

  KgEmbedding model;
  Rng init = make_stream(config.seed, "init");
  auto make = [&](std::size_t count) {
    GaussianEmbedding g;
    g.count = count;
    g.half_dim = half;
    g.mu.resize(count * half);
    const double bound = 6.0 / std::sqrt(static_cast<double>(half));
    for (double& v : g.mu) v = (2.0 * uniform01(init) - 1.0) * bound * 0.1;
    g.sigma.assign(count * half, 1.0);
    return g;
  };
  model.entities = make(kg.entities.size());
  model.relations = make(kg.relations.size());

  const TripleCorrupter corrupter(kg, config.mode);
  std::vector<std::size_t> order(kg.triples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    Rng rng = make_stream(config.seed, "kg2e-epoch", static_cast<std::uint64_t>(epoch));
    shuffle(order, rng);
    for (std::size_t idx : order) {
      const Triple& pos = kg.triples[idx];
      Corruption neg = corrupter.corrupt(pos, rng);
      KgPairLoss step = kg2e_pair_loss(model, pos, neg.triple, config.gamma, config.energy, config.margin_form);
      for (const KgRowGrad& g : step.grads) {
        GaussianEmbedding& table = g.relation ? model.relations : model.entities;
        auto mu = table.mu_row(g.row);
        auto sigma = table.sigma_row(g.row);
        for (std::size_t d = 0; d < half; ++d) {
          mu[d] -= config.learning_rate * g.d_mu[d];
          sigma[d] = std::clamp(sigma[d] - config.learning_rate * g.d_sigma[d], config.sigma_min, config.sigma_max);
        }
      }
    }
    model.history.record(model.entities);
  }
  return model;
}

}  // namespace graphemb
