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
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/SparseCore>

namespace graphemb {

using NodeId = std::uint32_t;
using AttributeMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

inline constexpr int kUnlabeled = -1;

// External string id <-> dense index, dense ids assigned in first-seen order.
class IdMap {
 public:
  NodeId intern(const std::string& name);
  std::optional<NodeId> find(const std::string& name) const;
  const std::string& name(NodeId id) const { return names_.at(id); }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  // Identity map "0", "1", ... "n-1".
  static IdMap identity(std::size_t n);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
};

struct Edge {
  NodeId src{0};
  NodeId dst{0};
  double weight{1.0};

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId id{0};
  double weight{1.0};
};

// Immutable adjacency-list graph in CSR form. Undirected graphs store each
// logical edge once in edges() and expose it from both endpoints in
// neighbors(); a self-loop appears once in its node's list.
class Graph {
 public:
  Graph() = default;

  // Duplicate edges collapse: weights are summed for weighted graphs and
  // stay 1 for binary ones. Undirected (u,v) and (v,u) are the same edge.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          bool directed, bool weighted, IdMap ids = {});

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t arc_count() const noexcept { return adjacency_.size(); }
  bool directed() const noexcept { return directed_; }
  bool weighted() const noexcept { return weighted_; }

  std::span<const Neighbor> neighbors(NodeId u) const {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }
  // Position of the arc u->v in the flat adjacency array, if present.
  std::optional<std::size_t> arc_index(NodeId u, NodeId v) const;
  std::size_t arc_offset(NodeId u) const { return offsets_[u]; }
  bool has_edge(NodeId u, NodeId v) const { return arc_index(u, v).has_value(); }
  double weight(NodeId u, NodeId v) const;  // 0 when absent
  std::size_t out_degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }
  double weighted_degree(NodeId u) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const IdMap& ids() const noexcept { return ids_; }

  bool has_attributes() const noexcept { return attributes_.has_value(); }
  const AttributeMatrix& attributes() const { return attributes_.value(); }
  std::size_t attribute_dim() const noexcept {
    return attributes_ ? static_cast<std::size_t>(attributes_->cols()) : 0;
  }
  Graph with_attributes(AttributeMatrix attributes) const;

  bool has_labels() const noexcept { return labels_.has_value(); }
  const std::vector<int>& labels() const { return labels_.value(); }
  Graph with_labels(std::vector<int> labels) const;

  // Same node set and ids, different edges (used for train-only graphs).
  Graph with_edges(std::span<const Edge> edges) const;

 private:
  bool directed_{false};
  bool weighted_{false};
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<Edge> edges_;
  IdMap ids_;
  std::optional<AttributeMatrix> attributes_;
  std::optional<std::vector<int>> labels_;
};

// Edge list text: "src dst [weight]" per line, '#' comments, blank lines ok.
Graph load_edge_list(std::istream& in, bool directed, bool weighted);
void write_edge_list(const Graph& graph, std::ostream& out);

// "node feat value" triples. Empty stream leaves the graph without attributes.
Graph load_attributes(const Graph& graph, std::istream& in);

// "node label" rows with integer labels; nodes without a row get kUnlabeled.
Graph load_labels(const Graph& graph, std::istream& in);

inline constexpr int kUnreachable = -1;

// Hop counts from source following out-arcs, ignoring weights.
std::vector<int> bfs_distances(const Graph& graph, NodeId source);

// nullopt when j is unreachable from i.
std::optional<int> shortest_path_length(const Graph& graph, NodeId i, NodeId j);

// bucket(k) holds the nodes j != source with min(sp, K) == k. Unreachable
// nodes are in no bucket.
class HopBuckets {
 public:
  explicit HopBuckets(int max_hop) : buckets_(static_cast<std::size_t>(max_hop)) {}
  int max_hop() const noexcept { return static_cast<int>(buckets_.size()); }
  const std::vector<NodeId>& bucket(int k) const { return buckets_.at(static_cast<std::size_t>(k - 1)); }
  std::vector<NodeId>& bucket(int k) { return buckets_.at(static_cast<std::size_t>(k - 1)); }

 private:
  std::vector<std::vector<NodeId>> buckets_;
};

HopBuckets k_hop_neighborhoods(const Graph& graph, NodeId source, int max_hop);

}  // namespace graphemb
