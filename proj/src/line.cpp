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

#include "graphemb/line.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "graphemb/alias.hpp"
#include "graphemb/error.hpp"
#include "graphemb/random.hpp"
#include "graphemb/sgns.hpp"
#include "sgns_common.hpp"

namespace graphemb {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) s += a[d] * b[d];
  return s;
}

void check_batch(const Graph& graph, std::span<const Edge> batch) {
  for (const Edge& e : batch) {
    if (e.src >= graph.node_count() || e.dst >= graph.node_count()) {
      throw ValidationError("batch edge endpoint out of range");
    }
  }
}

void axpy(double a, std::span<const double> x, double* y) {
  for (std::size_t d = 0; d < x.size(); ++d) y[d] += a * x[d];
}

}  // namespace

LineLoss line_first_order_loss(const Graph& graph, const PointEmbedding& emb, std::span<const Edge> batch) {
  if (graph.directed()) throw ValidationError("first-order proximity needs an undirected graph");
  if (emb.node_count != graph.node_count()) throw ValidationError("embedding does not match graph");
  check_batch(graph, batch);
  const std::size_t dim = emb.dim;
  LineLoss out;
  out.grad_center.assign(emb.center.size(), 0.0);
  out.grad_context.assign(emb.context.size(), 0.0);
  if (batch.empty()) return out;

  const auto& edges = graph.edges();
  std::vector<double> logits(edges.size());
  double max_logit = -std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    logits[e] = dot(emb.row(edges[e].src), emb.row(edges[e].dst));
    max_logit = std::max(max_logit, logits[e]);
  }
  double z = 0.0;
  for (double l : logits) z += std::exp(l - max_logit);
  const double log_norm = max_logit + std::log(z);

  double total_weight = 0.0;
  for (const Edge& b : batch) {
    double l = dot(emb.row(b.src), emb.row(b.dst));
    out.loss -= b.weight * (l - log_norm);
    total_weight += b.weight;
    axpy(-b.weight, emb.row(b.dst), out.grad_center.data() + b.src * dim);
    axpy(-b.weight, emb.row(b.src), out.grad_center.data() + b.dst * dim);
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    double p = std::exp(logits[e] - log_norm) * total_weight;
    axpy(p, emb.row(edges[e].dst), out.grad_center.data() + edges[e].src * dim);
    axpy(p, emb.row(edges[e].src), out.grad_center.data() + edges[e].dst * dim);
  }
  return out;
}

LineLoss line_second_order_loss(const Graph& graph, const PointEmbedding& emb, std::span<const Edge> batch) {
  if (emb.node_count != graph.node_count()) throw ValidationError("embedding does not match graph");
  check_batch(graph, batch);
  const std::size_t n = graph.node_count();
  const std::size_t dim = emb.dim;
  LineLoss out;
  out.grad_center.assign(emb.center.size(), 0.0);
  out.grad_context.assign(emb.context.size(), 0.0);

  std::vector<double> logits(n), prob(n);
  for (const Edge& b : batch) {
    auto zi = emb.row(b.src);
    double max_logit = -std::numeric_limits<double>::infinity();
    for (NodeId k = 0; k < n; ++k) {
      logits[k] = dot(emb.context_row(k), zi);
      max_logit = std::max(max_logit, logits[k]);
    }
    double z = 0.0;
    for (NodeId k = 0; k < n; ++k) z += std::exp(logits[k] - max_logit);
    double log_norm = max_logit + std::log(z);
    out.loss -= b.weight * (logits[b.dst] - log_norm);

    double* gi = out.grad_center.data() + b.src * dim;
    axpy(-b.weight, emb.context_row(b.dst), gi);
    axpy(-b.weight, zi, out.grad_context.data() + b.dst * dim);
    for (NodeId k = 0; k < n; ++k) {
      prob[k] = std::exp(logits[k] - log_norm) * b.weight;
      axpy(prob[k], emb.context_row(k), gi);
      axpy(prob[k], zi, out.grad_context.data() + k * dim);
    }
  }
  return out;
}

std::vector<Edge> graph_arcs(const Graph& graph) {
  std::vector<Edge> arcs;
  arcs.reserve(graph.arc_count());
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    for (const Neighbor& nb : graph.neighbors(u)) arcs.push_back({u, nb.id, nb.weight});
  }
  return arcs;
}

void LineConfig::validate() const {
  if (dim < 1) throw ValidationError("dim must be >= 1");
  if (epochs < 0) throw ValidationError("epochs must be >= 0");
  if (!(learning_rate > 0.0)) throw ValidationError("learning rate must be > 0");
  if (negatives < 1) throw ValidationError("negatives must be >= 1");
  if (noise_exponent < 0.0 || noise_exponent > 1.0) throw ValidationError("noise exponent must be in [0, 1]");
  if (threads < 1) throw ValidationError("threads must be >= 1");
}

PointEmbedding train_line(const Graph& graph, int order, const LineConfig& config) {
  if (order != 1 && order != 2) throw ValidationError("LINE order must be 1 or 2");
  if (order == 1 && graph.directed()) throw ValidationError("first-order LINE needs an undirected graph");
  config.validate();

  PointEmbedding emb = init_embeddings(graph.node_count(), config.dim, config.seed);
  const std::vector<Edge> arcs = graph_arcs(graph);
  if (config.epochs == 0 || arcs.empty()) return emb;

  std::vector<double> arc_weight(arcs.size());
  for (std::size_t a = 0; a < arcs.size(); ++a) arc_weight[a] = arcs[a].weight;
  const AliasTable edge_sampler(arc_weight);
  std::vector<double> degree(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) degree[v] = graph.weighted_degree(v);
  const NoiseDistribution noise(degree, config.noise_exponent);

  const std::size_t dim = config.dim;
  const std::size_t total = arcs.size() * static_cast<std::size_t>(config.epochs);
  double* targets = order == 1 ? emb.center.data() : emb.context.data();
  std::atomic<std::size_t> processed{0};

  auto run = [&](std::size_t samples, Rng& rng) {
    std::vector<double> step(dim);
    double lr = config.learning_rate;
    std::size_t local = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      if ((local & 1023) == 0) {
        std::size_t done = processed.fetch_add(local, std::memory_order_relaxed) + local;
        local = 0;
        lr = config.learning_rate * std::max(1e-4, 1.0 - static_cast<double>(done) / static_cast<double>(total));
      }
      ++local;
      const Edge& arc = arcs[edge_sampler.sample(rng)];
      double* input = emb.center.data() + arc.src * dim;
      std::fill(step.begin(), step.end(), 0.0);
      detail::sgns_update(input, targets + arc.dst * dim, step.data(), dim, detail::Sample::kPositive, lr);
      for (int k = 0; k < config.negatives; ++k) {
        NodeId neg = noise.sample(rng);
        if (neg == arc.dst) continue;
        detail::sgns_update(input, targets + neg * dim, step.data(), dim, detail::Sample::kNegative, lr);
      }
      for (std::size_t d = 0; d < dim; ++d) detail::store(input[d], detail::load(input[d]) + step[d]);
    }
    processed.fetch_add(local, std::memory_order_relaxed);
  };

  if (config.threads <= 1) {
    Rng rng = make_stream(config.seed, "line");
    run(total, rng);
  } else {
    const auto threads = static_cast<std::size_t>(config.threads);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      std::size_t share = total / threads + (t < total % threads ? 1 : 0);
      pool.emplace_back([&, share, t] {
        Rng rng = make_stream(config.seed, "line", t + 1);
        run(share, rng);
      });
    }
    for (auto& th : pool) th.join();
  }
  return emb;
}

}  // namespace graphemb
