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
#include <utility>
#include <vector>

#include "graphemb/graph.hpp"

namespace graphemb {

using NodePair = std::pair<NodeId, NodeId>;

// Train/validation/test partition of a graph's edges plus as many sampled
// non-edges as there are held-out edges in each split.
struct EdgeSplit {
  std::vector<Edge> train_edges;
  std::vector<Edge> val_edges;
  std::vector<Edge> test_edges;
  std::vector<NodePair> val_nonedges;
  std::vector<NodePair> test_nonedges;
  std::uint64_t seed{0};
};

// |val| = round(p_val |E|), |test| = round(p_test |E|). Non-edges are
// distinct, never self pairs, and absent from the original edge set in
// either orientation for undirected graphs. Throws ValidationError when
// not enough non-edges can be found.
EdgeSplit split_edges(const Graph& graph, double p_val, double p_test, std::uint64_t seed);

}  // namespace graphemb
