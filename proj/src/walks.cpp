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

#include "graphemb/walks.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

#include "graphemb/error.hpp"
#include "graphemb/random.hpp"

namespace graphemb {

void WalkConfig::validate() const {
  if (num_walks < 1) throw ValidationError("num_walks must be >= 1");
  if (walk_length < 1) throw ValidationError("walk_length must be >= 1");
  if (window < 1) throw ValidationError("window must be >= 1");
  if (!(p > 0.0) || !(q > 0.0)) throw ValidationError("p and q must be positive");
  if (threads < 1) throw ValidationError("threads must be >= 1");
}

TransitionTable::TransitionTable(const Graph& graph, double p, double q)
    : graph_(&graph), p_(p), q_(q) {
  if (!(p > 0.0) || !(q > 0.0)) throw ValidationError("p and q must be positive");
  const std::size_t n = graph.node_count();
  first_step_.resize(n);
  std::vector<double> mass;
  for (NodeId v = 0; v < n; ++v) {
    mass.clear();
    for (const Neighbor& nb : graph.neighbors(v)) mass.push_back(nb.weight);
    if (!mass.empty()) first_step_[v] = AliasTable(mass);
  }
  arc_once_ = std::make_unique<std::once_flag[]>(graph.arc_count());
  arc_tables_.resize(graph.arc_count());
}

std::vector<double> TransitionTable::second_order_mass(NodeId prev, NodeId cur) const {
  std::vector<double> mass;
  for (const Neighbor& nb : graph_->neighbors(cur)) {
    double alpha;
    if (nb.id == prev) {
      alpha = 1.0 / p_;
    } else if (graph_->has_edge(prev, nb.id)) {
      alpha = 1.0;
    } else {
      alpha = 1.0 / q_;
    }
    mass.push_back(alpha * nb.weight);
  }
  return mass;
}

const AliasTable& TransitionTable::arc_table(std::size_t arc, NodeId prev, NodeId cur) const {
  std::call_once(arc_once_[arc], [&] {
    auto mass = second_order_mass(prev, cur);
    if (!mass.empty()) arc_tables_[arc] = AliasTable(mass);
  });
  return arc_tables_[arc];
}

const AliasTable& TransitionTable::second_order(NodeId prev, NodeId cur) const {
  auto arc = graph_->arc_index(prev, cur);
  if (!arc) throw ValidationError("second-order context requires an arc prev->cur");
  return arc_table(*arc, prev, cur);
}

void TransitionTable::build_all() const {
  for (NodeId u = 0; u < graph_->node_count(); ++u) {
    std::size_t base = graph_->arc_offset(u);
    auto nb = graph_->neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) arc_table(base + i, u, nb[i].id);
  }
}

std::size_t TransitionTable::built_count() const {
  return static_cast<std::size_t>(
      std::count_if(arc_tables_.begin(), arc_tables_.end(), [](const AliasTable& t) { return !t.empty(); }));
}

TransitionTable preprocess_transition_probs(const Graph& graph, double p, double q) {
  return TransitionTable(graph, p, q);
}

namespace {

std::vector<NodeId> walk_from(const TransitionTable& table, NodeId start, int length, Rng& rng) {
  const Graph& g = table.graph();
  std::vector<NodeId> walk{start};
  walk.reserve(static_cast<std::size_t>(length));
  while (walk.size() < static_cast<std::size_t>(length)) {
    NodeId cur = walk.back();
    auto nb = g.neighbors(cur);
    if (nb.empty()) break;
    std::size_t pick;
    if (walk.size() == 1) {
      pick = table.first_step(cur).sample(rng);
    } else {
      pick = table.second_order(walk[walk.size() - 2], cur).sample(rng);
    }
    walk.push_back(nb[pick].id);
  }
  return walk;
}

}  // namespace

WalkCorpus simulate_walks(const TransitionTable& table, const WalkConfig& config) {
  config.validate();
  const std::size_t n = table.graph().node_count();
  WalkCorpus corpus;
  corpus.config = config;
  corpus.walks.resize(n * static_cast<std::size_t>(config.num_walks));

  // Slot i of the corpus belongs to (pass, position in that pass's order).
  std::vector<std::pair<NodeId, int>> jobs;
  jobs.reserve(corpus.walks.size());
  std::vector<NodeId> order(n);
  for (int pass = 0; pass < config.num_walks; ++pass) {
    for (NodeId v = 0; v < n; ++v) order[v] = v;
    Rng order_rng = make_stream(config.seed, "walk-order", static_cast<std::uint64_t>(pass));
    shuffle(order, order_rng);
    for (NodeId v : order) jobs.emplace_back(v, pass);
  }

  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto [start, pass] = jobs[i];
      Rng rng = make_stream(config.seed, "walk", start, static_cast<std::uint64_t>(pass));
      corpus.walks[i] = walk_from(table, start, config.walk_length, rng);
    }
  };

  const auto threads = static_cast<std::size_t>(config.threads);
  if (threads <= 1 || jobs.size() < 2) {
    run(0, jobs.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (jobs.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      std::size_t b = t * chunk, e = std::min(jobs.size(), b + chunk);
      if (b < e) pool.emplace_back(run, b, e);
    }
    for (auto& th : pool) th.join();
  }
  return corpus;
}

void for_each_context_pair(const WalkCorpus& corpus, int window,
                           const std::function<void(NodeId, NodeId)>& fn) {
  if (window < 1) throw ValidationError("window must be >= 1");
  const auto w = static_cast<std::size_t>(window);
  for (const auto& walk : corpus.walks) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
      std::size_t lo = i >= w ? i - w : 0;
      std::size_t hi = std::min(walk.size() - 1, i + w);
      for (std::size_t j = lo; j <= hi; ++j) {
        if (j != i) fn(walk[i], walk[j]);
      }
    }
  }
}

std::vector<std::pair<NodeId, NodeId>> context_pairs(const WalkCorpus& corpus, int window) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for_each_context_pair(corpus, window, [&](NodeId u, NodeId v) { pairs.emplace_back(u, v); });
  return pairs;
}

void write_corpus(const WalkCorpus& corpus, const IdMap& ids, std::ostream& out) {
  for (const auto& walk : corpus.walks) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (i) out << ' ';
      out << ids.name(walk[i]);
    }
    out << '\n';
  }
}

}  // namespace graphemb
