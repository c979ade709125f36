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

#include "graphemb/gaussian.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "graphemb/embedding.hpp"
#include "graphemb/error.hpp"

namespace graphemb {

void GaussianEmbedding::validate() const {
  if (mu.size() != count * half_dim || sigma.size() != count * half_dim) {
    throw ValidationError("gaussian embedding tables have the wrong size");
  }
  for (double s : sigma) {
    if (!(s > 0.0) || !std::isfinite(s)) throw ValidationError("variances must be positive and finite");
  }
}

namespace {

void check(GaussianView i, GaussianView j) {
  const std::size_t d = i.mu.size();
  if (i.sigma.size() != d || j.mu.size() != d || j.sigma.size() != d) {
    throw ValidationError("gaussian energy: dimension mismatch");
  }
  for (std::size_t k = 0; k < d; ++k) {
    if (!(i.sigma[k] > 0.0) || !(j.sigma[k] > 0.0)) throw ValidationError("gaussian energy: variance must be > 0");
  }
}

}  // namespace

double kl_energy(GaussianView i, GaussianView j) {
  check(i, j);
  double sum = 0.0;
  for (std::size_t d = 0; d < i.mu.size(); ++d) {
    double diff = j.mu[d] - i.mu[d];
    double ratio = i.sigma[d] / j.sigma[d];
    sum += ratio + diff * diff / j.sigma[d] - std::log(ratio) - 1.0;
  }
  return 0.5 * sum;
}

EnergyGrad kl_energy_grad(GaussianView i, GaussianView j) {
  check(i, j);
  const std::size_t n = i.mu.size();
  EnergyGrad g;
  g.d_mu_i.resize(n);
  g.d_sigma_i.resize(n);
  g.d_mu_j.resize(n);
  g.d_sigma_j.resize(n);
  double sum = 0.0;
  for (std::size_t d = 0; d < n; ++d) {
    double diff = j.mu[d] - i.mu[d];
    double si = i.sigma[d], sj = j.sigma[d];
    sum += si / sj + diff * diff / sj - std::log(si / sj) - 1.0;
    g.d_mu_i[d] = -diff / sj;
    g.d_mu_j[d] = diff / sj;
    g.d_sigma_i[d] = 0.5 * (1.0 / sj - 1.0 / si);
    g.d_sigma_j[d] = 0.5 * (-si / (sj * sj) - diff * diff / (sj * sj) + 1.0 / sj);
  }
  g.value = 0.5 * sum;
  return g;
}

double neg_log_el_energy(GaussianView i, GaussianView j) {
  check(i, j);
  double sum = 0.0;
  for (std::size_t d = 0; d < i.mu.size(); ++d) {
    double v = i.sigma[d] + j.sigma[d];
    double diff = i.mu[d] - j.mu[d];
    sum += std::log(2.0 * std::numbers::pi * v) + diff * diff / v;
  }
  return 0.5 * sum;
}

double el_energy(GaussianView i, GaussianView j) { return std::exp(-neg_log_el_energy(i, j)); }

EnergyGrad neg_log_el_energy_grad(GaussianView i, GaussianView j) {
  check(i, j);
  const std::size_t n = i.mu.size();
  EnergyGrad g;
  g.d_mu_i.resize(n);
  g.d_sigma_i.resize(n);
  g.d_mu_j.resize(n);
  g.d_sigma_j.resize(n);
  double sum = 0.0;
  for (std::size_t d = 0; d < n; ++d) {
    double v = i.sigma[d] + j.sigma[d];
    double diff = i.mu[d] - j.mu[d];
    sum += std::log(2.0 * std::numbers::pi * v) + diff * diff / v;
    g.d_mu_i[d] = diff / v;
    g.d_mu_j[d] = -diff / v;
    double dv = 0.5 * (1.0 / v - diff * diff / (v * v));
    g.d_sigma_i[d] = dv;
    g.d_sigma_j[d] = dv;
  }
  g.value = 0.5 * sum;
  return g;
}

double w2_distance(GaussianView i, GaussianView j) {
  check(i, j);
  double sum = 0.0;
  for (std::size_t d = 0; d < i.mu.size(); ++d) {
    double dm = i.mu[d] - j.mu[d];
    double ds = std::sqrt(i.sigma[d]) - std::sqrt(j.sigma[d]);
    sum += dm * dm + ds * ds;
  }
  return std::sqrt(sum);
}

double square_exp_loss(std::span<const EnergyPair> pairs) {
  double sum = 0.0;
  for (const EnergyPair& p : pairs) sum += p.pos * p.pos + std::exp(-p.neg);
  return sum;
}

double margin_ranking_loss(std::span<const double> pos, std::span<const double> neg, double gamma,
                           MarginForm form) {
  if (pos.size() != neg.size()) throw ValidationError("margin loss: energy lists differ in length");
  if (gamma < 0.0) throw ValidationError("margin must be >= 0");
  double sum = 0.0;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    double slack = form == MarginForm::kConventional ? pos[k] + gamma - neg[k] : pos[k] - gamma + neg[k];
    sum += std::max(0.0, slack);
  }
  return sum;
}

MarginSubgradient margin_subgradient(double pos, double neg, double gamma, MarginForm form) {
  if (form == MarginForm::kConventional) {
    if (pos + gamma - neg > 0.0) return {1.0, -1.0};
  } else {
    if (pos - gamma + neg > 0.0) return {1.0, 1.0};
  }
  return {0.0, 0.0};
}

void EmbeddingHistory::record(const GaussianEmbedding& embedding) {
  if (mean_sigma.empty()) dims = embedding.half_dim;
  if (embedding.half_dim != dims) throw ValidationError("history dimension changed between epochs");
  std::vector<double> mean(dims, 0.0);
  for (std::size_t i = 0; i < embedding.count; ++i) {
    auto s = embedding.sigma_row(i);
    for (std::size_t d = 0; d < dims; ++d) mean[d] += s[d];
  }
  if (embedding.count > 0) {
    for (double& m : mean) m /= static_cast<double>(embedding.count);
  }
  mean_sigma.push_back(std::move(mean));
}

void write_gaussian_embedding(const GaussianEmbedding& embedding, const IdMap& ids, std::ostream& out) {
  if (ids.size() != embedding.count) throw ValidationError("id map does not match embedding rows");
  EmbeddingTable table;
  table.ids = ids;
  table.rows = embedding.count;
  table.cols = 2 * embedding.half_dim;
  table.values.reserve(table.rows * table.cols);
  for (std::size_t i = 0; i < embedding.count; ++i) {
    for (double v : embedding.mu_row(i)) table.values.push_back(v);
    for (double v : embedding.sigma_row(i)) table.values.push_back(v);
  }
  write_embedding_table(table, out);
}

void write_variance_csv(const EmbeddingHistory& history, std::ostream& out) {
  out << "epoch,dim,mean_sigma\n";
  char buf[64];
  for (std::size_t e = 0; e < history.mean_sigma.size(); ++e) {
    for (std::size_t d = 0; d < history.dims; ++d) {
      std::snprintf(buf, sizeof buf, "%zu,%zu,%.9g\n", e, d, history.mean_sigma[e][d]);
      out << buf;
    }
  }
}

}  // namespace graphemb
