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

#include <iosfwd>
#include <span>
#include <vector>

#include "graphemb/graph.hpp"

namespace graphemb {

// Per-node diagonal Gaussians: mean and variance rows of width half_dim.
struct GaussianEmbedding {
  std::size_t count{0};
  std::size_t half_dim{0};
  std::vector<double> mu;
  std::vector<double> sigma;  // diagonal variances, > 0

  std::span<double> mu_row(std::size_t i) { return {mu.data() + i * half_dim, half_dim}; }
  std::span<const double> mu_row(std::size_t i) const { return {mu.data() + i * half_dim, half_dim}; }
  std::span<double> sigma_row(std::size_t i) { return {sigma.data() + i * half_dim, half_dim}; }
  std::span<const double> sigma_row(std::size_t i) const { return {sigma.data() + i * half_dim, half_dim}; }

  void validate() const;
};

struct GaussianView {
  std::span<const double> mu;
  std::span<const double> sigma;
};

inline GaussianView view(const GaussianEmbedding& e, std::size_t i) { return {e.mu_row(i), e.sigma_row(i)}; }

// KL(P_i || P_j) = 1/2 sum_d [s_i/s_j + (mu_j - mu_i)^2/s_j - log(s_i/s_j) - 1].
double kl_energy(GaussianView i, GaussianView j);

// Expected likelihood: integral of N(x; i) N(x; j) dx = N(0; mu_i - mu_j, S_i + S_j).
double el_energy(GaussianView i, GaussianView j);

// -log of the expected likelihood; the dissimilarity used for ranking.
double neg_log_el_energy(GaussianView i, GaussianView j);

// 2-Wasserstein distance for diagonal covariances.
double w2_distance(GaussianView i, GaussianView j);

struct EnergyGrad {
  double value{0.0};
  std::vector<double> d_mu_i, d_sigma_i, d_mu_j, d_sigma_j;
};

EnergyGrad kl_energy_grad(GaussianView i, GaussianView j);
EnergyGrad neg_log_el_energy_grad(GaussianView i, GaussianView j);

struct EnergyPair {
  double pos{0.0};
  double neg{0.0};
};

// sum (E_pos^2 + exp(-E_neg)).
double square_exp_loss(std::span<const EnergyPair> pairs);

// kConventional: max(0, E_pos + gamma - E_neg).
// kAsPrinted:    max(0, E_pos - gamma + E_neg).
enum class MarginForm { kConventional, kAsPrinted };

// Pairs pos[i] with neg[i].
double margin_ranking_loss(std::span<const double> pos, std::span<const double> neg, double gamma,
                           MarginForm form = MarginForm::kConventional);

struct MarginSubgradient {
  double d_pos{0.0};
  double d_neg{0.0};
};
MarginSubgradient margin_subgradient(double pos, double neg, double gamma,
                                     MarginForm form = MarginForm::kConventional);

// Per-epoch, per-dimension mean variance over all nodes.
struct EmbeddingHistory {
  std::size_t dims{0};
  std::vector<std::vector<double>> mean_sigma;  // epochs x dims

  void record(const GaussianEmbedding& embedding);
};

// "count 2*half_dim" header, then "id mu_1..mu_h sigma_1..sigma_h".
void write_gaussian_embedding(const GaussianEmbedding& embedding, const IdMap& ids, std::ostream& out);

// "epoch,dim,mean_sigma" CSV, epochs and dims 0-based.
void write_variance_csv(const EmbeddingHistory& history, std::ostream& out);

}  // namespace graphemb
