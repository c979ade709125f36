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

#include "graphemb/sgns.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "graphemb/error.hpp"
#include "sgns_common.hpp"

namespace graphemb {

using detail::log_sigmoid;
using detail::sigmoid;

NoiseDistribution::NoiseDistribution(std::span<const double> counts, double exponent,
                                     std::span<const std::uint64_t> keys) {
  if (exponent < 0.0 || exponent > 1.0) throw ValidationError("noise exponent must be in [0, 1]");
  if (counts.empty()) throw ValidationError("noise distribution needs at least one node");
  if (!keys.empty() && keys.size() != counts.size()) throw ValidationError("one key per node required");
  order_.resize(counts.size());
  std::iota(order_.begin(), order_.end(), NodeId{0});
  if (!keys.empty()) {
    std::stable_sort(order_.begin(), order_.end(), [&](NodeId a, NodeId b) { return keys[a] < keys[b]; });
  }
  std::vector<double> mass(counts.size());
  double total = 0.0;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    double c = counts[order_[i]];
    if (c < 0.0) throw ValidationError("noise counts must be >= 0");
    mass[i] = exponent == 0.0 ? 1.0 : (c > 0.0 ? std::pow(c, exponent) : 0.0);
    total += mass[i];
  }
  if (!(total > 0.0)) std::fill(mass.begin(), mass.end(), 1.0);
  table_ = AliasTable(mass);
}

std::vector<double> NoiseDistribution::probabilities() const {
  std::vector<double> by_slot = table_.distribution();
  std::vector<double> p(by_slot.size());
  for (std::size_t i = 0; i < by_slot.size(); ++i) p[order_[i]] = by_slot[i];
  return p;
}

std::vector<NodeId> negative_sample(const Graph& graph, double beta, int k, Rng& rng) {
  if (k < 0) throw ValidationError("negative count must be >= 0");
  std::vector<double> degree(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) degree[v] = graph.weighted_degree(v);
  NoiseDistribution noise(degree, beta);
  std::vector<NodeId> out(static_cast<std::size_t>(k));
  for (NodeId& v : out) v = noise.sample(rng);
  return out;
}

PairLoss sgns_pair_loss(std::span<const double> center, std::span<const double> context,
                        std::span<const std::span<const double>> negatives, NegativeTerm term) {
  const std::size_t dim = center.size();
  if (context.size() != dim) throw ValidationError("pair loss: dimension mismatch");
  for (const auto& n : negatives) {
    if (n.size() != dim) throw ValidationError("pair loss: dimension mismatch");
  }
  auto dot = [dim](std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t d = 0; d < dim; ++d) s += a[d] * b[d];
    return s;
  };

  PairLoss out;
  out.grad_center.assign(dim, 0.0);
  out.grad_context.assign(dim, 0.0);
  out.grad_negatives.assign(negatives.size(), std::vector<double>(dim, 0.0));

  double pos = dot(center, context);
  out.loss = -log_sigmoid(pos);
  double g_pos = -(1.0 - sigmoid(pos));  // d/d(pos)
  for (std::size_t d = 0; d < dim; ++d) {
    out.grad_center[d] += g_pos * context[d];
    out.grad_context[d] = g_pos * center[d];
  }
  for (std::size_t i = 0; i < negatives.size(); ++i) {
    double s = dot(center, negatives[i]);
    double g;
    if (term == NegativeTerm::kStandard) {
      out.loss -= log_sigmoid(-s);
      g = sigmoid(s);
    } else {
      out.loss += log_sigmoid(s);
      g = 1.0 - sigmoid(s);
    }
    for (std::size_t d = 0; d < dim; ++d) {
      out.grad_center[d] += g * negatives[i][d];
      out.grad_negatives[i][d] = g * center[d];
    }
  }
  return out;
}

void SgnsConfig::validate() const {
  if (dim < 1) throw ValidationError("dim must be >= 1");
  if (epochs < 0) throw ValidationError("epochs must be >= 0");
  if (!(learning_rate > 0.0)) throw ValidationError("learning rate must be > 0");
  if (negatives < 1) throw ValidationError("negatives must be >= 1");
  if (noise_exponent < 0.0 || noise_exponent > 1.0) throw ValidationError("noise exponent must be in [0, 1]");
  if (window < 1) throw ValidationError("window must be >= 1");
  if (threads < 1) throw ValidationError("threads must be >= 1");
}

PointEmbedding train_skipgram(const WalkCorpus& corpus, std::size_t node_count, const SgnsConfig& config,
                              std::span<const std::uint64_t> keys, const EpochCallback& on_epoch) {
  config.validate();
  std::size_t tokens = 0;
  std::vector<double> counts(node_count, 0.0);
  for (const auto& walk : corpus.walks) {
    for (NodeId v : walk) {
      if (v >= node_count) throw ValidationError("corpus node id out of range");
      counts[v] += 1.0;
    }
    tokens += walk.size();
  }
  if (tokens == 0) throw ValidationError("cannot train on an empty corpus");

  PointEmbedding emb = init_embeddings(node_count, config.dim, config.seed, keys);
  if (config.epochs == 0) return emb;

  NoiseDistribution noise(counts, config.noise_exponent, keys);
  const std::size_t dim = config.dim;
  const auto window = static_cast<std::size_t>(config.window);

  std::size_t pairs_per_epoch = 0;
  for (const auto& walk : corpus.walks) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
      std::size_t lo = i >= window ? i - window : 0;
      std::size_t hi = std::min(walk.size() - 1, i + window);
      pairs_per_epoch += hi - lo;
    }
  }
  const double total_pairs = static_cast<double>(pairs_per_epoch) * config.epochs;
  std::atomic<std::size_t> processed{0};
  const auto negative_kind = config.negative_term == NegativeTerm::kStandard ? detail::Sample::kNegative
                                                                             : detail::Sample::kNegativeAsPrinted;

  auto run = [&](std::size_t walk_begin, std::size_t walk_end, Rng& rng) {
    std::vector<double> step(dim);
    std::size_t local = 0;
    double lr = config.learning_rate;
    for (std::size_t w = walk_begin; w < walk_end; ++w) {
      const auto& walk = corpus.walks[w];
      for (std::size_t i = 0; i < walk.size(); ++i) {
        std::size_t lo = i >= window ? i - window : 0;
        std::size_t hi = std::min(walk.size() - 1, i + window);
        double* input = emb.center.data() + walk[i] * dim;
        for (std::size_t j = lo; j <= hi; ++j) {
          if (j == i) continue;
          if (config.linear_decay && (local & 1023) == 0) {
            std::size_t done = processed.fetch_add(local, std::memory_order_relaxed) + local;
            local = 0;
            lr = config.learning_rate * std::max(1e-4, 1.0 - static_cast<double>(done) / total_pairs);
          }
          ++local;
          std::fill(step.begin(), step.end(), 0.0);
          NodeId ctx = walk[j];
          detail::sgns_update(input, emb.context.data() + ctx * dim, step.data(), dim, detail::Sample::kPositive, lr);
          for (int k = 0; k < config.negatives; ++k) {
            NodeId neg = noise.sample(rng);
            if (neg == ctx) continue;
            detail::sgns_update(input, emb.context.data() + neg * dim, step.data(), dim, negative_kind, lr);
          }
          for (std::size_t d = 0; d < dim; ++d) detail::store(input[d], detail::load(input[d]) + step[d]);
        }
      }
    }
    processed.fetch_add(local, std::memory_order_relaxed);
  };

  const std::size_t walks = corpus.walks.size();
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    if (config.threads <= 1) {
      Rng rng = make_stream(config.seed, "negatives", static_cast<std::uint64_t>(epoch));
      run(0, walks, rng);
    } else {
      const auto threads = static_cast<std::size_t>(config.threads);
      const std::size_t chunk = (walks + threads - 1) / threads;
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < threads; ++t) {
        std::size_t b = t * chunk, e = std::min(walks, b + chunk);
        if (b >= e) continue;
        pool.emplace_back([&, b, e, t, epoch] {
          Rng rng = make_stream(config.seed, "negatives", static_cast<std::uint64_t>(epoch), t + 1);
          run(b, e, rng);
        });
      }
      for (auto& th : pool) th.join();
    }
    if (on_epoch) on_epoch(epoch + 1, emb);
  }
  return emb;
}

}  // namespace graphemb
