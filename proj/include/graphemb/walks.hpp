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
#include <iosfwd>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "graphemb/alias.hpp"
#include "graphemb/graph.hpp"

namespace graphemb {

struct WalkConfig {
  int num_walks{10};
  int walk_length{80};
  int window{10};
  double p{1.0};  // return parameter
  double q{1.0};  // in-out parameter
  std::uint64_t seed{1};
  int threads{1};

  void validate() const;
};

// Second-order transition tables for biased walks. For previous node t and
// current node v, candidate x in N(v) has mass w_vx * alpha(t, x) with
// alpha = 1/p when x == t, 1 when t->x is an edge, 1/q otherwise.
//
// First-step tables (no previous node) are built eagerly and are purely
// weight-proportional. Second-order tables are keyed by the arc t->v and
// built on first use, exactly once, so concurrent walkers may share one
// instance. The graph must outlive the table.
class TransitionTable {
 public:
  TransitionTable(const Graph& graph, double p, double q);

  const Graph& graph() const noexcept { return *graph_; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  const AliasTable& first_step(NodeId v) const { return first_step_[v]; }
  const AliasTable& second_order(NodeId prev, NodeId cur) const;

  // Unnormalized masses over neighbors(cur), in neighbor order.
  std::vector<double> second_order_mass(NodeId prev, NodeId cur) const;

  // Build every second-order table now instead of lazily.
  void build_all() const;
  std::size_t built_count() const;

 private:
  const AliasTable& arc_table(std::size_t arc, NodeId prev, NodeId cur) const;

  const Graph* graph_;
  double p_;
  double q_;
  std::vector<AliasTable> first_step_;
  mutable std::unique_ptr<std::once_flag[]> arc_once_;
  mutable std::vector<AliasTable> arc_tables_;
};

TransitionTable preprocess_transition_probs(const Graph& graph, double p, double q);

struct WalkCorpus {
  std::vector<std::vector<NodeId>> walks;
  WalkConfig config;
};

// num_walks passes; each pass visits every start node in a freshly shuffled
// order. A walk stops early at a node without out-neighbors. Every walk
// draws from its own stream derived from (seed, start node, pass), so the
// corpus is the same for any thread count.
WalkCorpus simulate_walks(const TransitionTable& table, const WalkConfig& config);

// Emits (walk[i], walk[j]) for every j != i with |i - j| <= window.
void for_each_context_pair(const WalkCorpus& corpus, int window,
                           const std::function<void(NodeId, NodeId)>& fn);
std::vector<std::pair<NodeId, NodeId>> context_pairs(const WalkCorpus& corpus, int window);

// One walk per line, space-separated external ids.
void write_corpus(const WalkCorpus& corpus, const IdMap& ids, std::ostream& out);

}  // namespace graphemb
