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

#include "graphemb/split.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "graphemb/error.hpp"
#include "graphemb/random.hpp"

namespace graphemb {

EdgeSplit split_edges(const Graph& graph, double p_val, double p_test, std::uint64_t seed) {
  if (p_val < 0.0 || p_test < 0.0 || p_val + p_test >= 1.0) {
    throw ValidationError("split fractions must be >= 0 and sum to less than 1");
  }
  const std::size_t m = graph.edge_count();
  const auto n_val = static_cast<std::size_t>(std::llround(p_val * static_cast<double>(m)));
  const auto n_test = static_cast<std::size_t>(std::llround(p_test * static_cast<double>(m)));
  if (n_val + n_test > m) throw ValidationError("split sizes exceed the edge count");

  EdgeSplit split;
  split.seed = seed;

  std::vector<Edge> edges = graph.edges();
  Rng rng = make_stream(seed, "split");
  shuffle(edges, rng);
  auto val_end = edges.begin() + static_cast<std::ptrdiff_t>(n_val);
  auto test_end = val_end + static_cast<std::ptrdiff_t>(n_test);
  split.val_edges.assign(edges.begin(), val_end);
  split.test_edges.assign(val_end, test_end);
  split.train_edges.assign(test_end, edges.end());
  auto by_endpoints = [](const Edge& a, const Edge& b) {
    return std::pair{a.src, a.dst} < std::pair{b.src, b.dst};
  };
  std::sort(split.train_edges.begin(), split.train_edges.end(), by_endpoints);

  const std::size_t n = graph.node_count();
  const std::size_t needed = n_val + n_test;
  if (needed == 0) return split;

  auto canonical = [&](NodeId u, NodeId v) {
    return graph.directed() ? NodePair{u, v} : NodePair{std::min(u, v), std::max(u, v)};
  };
  std::size_t non_self_edges = 0;
  for (const Edge& e : graph.edges()) non_self_edges += e.src != e.dst ? 1 : 0;
  const double total_pairs = graph.directed() ? static_cast<double>(n) * static_cast<double>(n - 1)
                                              : static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  if (n < 2 || total_pairs - static_cast<double>(non_self_edges) < static_cast<double>(needed)) {
    throw ValidationError("graph too dense to sample the requested number of non-edges");
  }

  std::set<NodePair> chosen;
  std::vector<NodePair> sampled;
  const std::size_t max_attempts = 100 * needed + 10000;
  Rng pair_rng = make_stream(seed, "split-nonedges");
  for (std::size_t attempt = 0; attempt < max_attempts && sampled.size() < needed; ++attempt) {
    auto u = static_cast<NodeId>(uniform_index(pair_rng, n));
    auto v = static_cast<NodeId>(uniform_index(pair_rng, n));
    if (u == v || graph.has_edge(u, v)) continue;
    if (!graph.directed() && graph.has_edge(v, u)) continue;
    NodePair key = canonical(u, v);
    if (!chosen.insert(key).second) continue;
    sampled.push_back(key);
  }
  if (sampled.size() < needed) {
    throw ValidationError("could not sample enough non-edges within the retry budget");
  }
  split.val_nonedges.assign(sampled.begin(), sampled.begin() + static_cast<std::ptrdiff_t>(n_val));
  split.test_nonedges.assign(sampled.begin() + static_cast<std::ptrdiff_t>(n_val), sampled.end());
  return split;
}

}  // namespace graphemb
