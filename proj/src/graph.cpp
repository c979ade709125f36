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

#include "graphemb/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>

#include "graphemb/error.hpp"
#include "text_records.hpp"

namespace graphemb {

NodeId IdMap::intern(const std::string& name) {
  auto [it, inserted] = index_.try_emplace(name, static_cast<NodeId>(names_.size()));
  if (inserted) names_.push_back(name);
  return it->second;
}

std::optional<NodeId> IdMap::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

IdMap IdMap::identity(std::size_t n) {
  IdMap ids;
  for (std::size_t i = 0; i < n; ++i) ids.intern(std::to_string(i));
  return ids;
}

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        bool directed, bool weighted, IdMap ids) {
  std::map<std::pair<NodeId, NodeId>, double> merged;
  for (const Edge& e : edges) {
    if (e.src >= node_count || e.dst >= node_count) {
      throw ValidationError("edge endpoint out of range");
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw ValidationError("edge weight must be positive and finite");
    }
    auto key = directed ? std::pair{e.src, e.dst}
                        : std::pair{std::min(e.src, e.dst), std::max(e.src, e.dst)};
    if (weighted) {
      merged[key] += e.weight;
    } else {
      merged[key] = 1.0;
    }
  }

  Graph g;
  g.directed_ = directed;
  g.weighted_ = weighted;
  if (ids.size() == 0) {
    ids = IdMap::identity(node_count);
  } else if (ids.size() != node_count) {
    throw ValidationError("id map size does not match node count");
  }
  g.ids_ = std::move(ids);

  g.edges_.reserve(merged.size());
  std::vector<std::size_t> degree(node_count, 0);
  for (const auto& [key, w] : merged) {
    g.edges_.push_back({key.first, key.second, w});
    ++degree[key.first];
    if (!directed && key.first != key.second) ++degree[key.second];
  }

  g.offsets_.assign(node_count + 1, 0);
  for (std::size_t u = 0; u < node_count; ++u) g.offsets_[u + 1] = g.offsets_[u] + degree[u];
  g.adjacency_.resize(g.offsets_[node_count]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adjacency_[cursor[e.src]++] = {e.dst, e.weight};
    if (!directed && e.src != e.dst) g.adjacency_[cursor[e.dst]++] = {e.src, e.weight};
  }
  for (std::size_t u = 0; u < node_count; ++u) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
  }
  return g;
}

std::optional<std::size_t> Graph::arc_index(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v,
                             [](const Neighbor& n, NodeId id) { return n.id < id; });
  if (it == nb.end() || it->id != v) return std::nullopt;
  return offsets_[u] + static_cast<std::size_t>(it - nb.begin());
}

double Graph::weight(NodeId u, NodeId v) const {
  auto idx = arc_index(u, v);
  return idx ? adjacency_[*idx].weight : 0.0;
}

double Graph::weighted_degree(NodeId u) const {
  double sum = 0.0;
  for (const Neighbor& n : neighbors(u)) sum += n.weight;
  return sum;
}

Graph Graph::with_attributes(AttributeMatrix attributes) const {
  if (static_cast<std::size_t>(attributes.rows()) != node_count()) {
    throw ValidationError("attribute matrix must have one row per node");
  }
  Graph g = *this;
  g.attributes_ = std::move(attributes);
  return g;
}

Graph Graph::with_labels(std::vector<int> labels) const {
  if (labels.size() != node_count()) throw ValidationError("label vector must have one entry per node");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

Graph Graph::with_edges(std::span<const Edge> edges) const {
  Graph g = from_edges(node_count(), edges, directed_, weighted_, ids_);
  g.attributes_ = attributes_;
  g.labels_ = labels_;
  return g;
}

Graph load_edge_list(std::istream& in, bool directed, bool weighted) {
  IdMap ids;
  std::vector<Edge> edges;
  detail::for_each_record(in, [&](std::size_t line_no, const std::vector<std::string>& tok) {
    if (tok.size() != 2 && tok.size() != 3) {
      throw ParseError(line_no, "expected 'src dst [weight]'");
    }
    double w = 1.0;
    if (tok.size() == 3) {
      w = detail::parse_double(tok[2], line_no);
      if (w <= 0.0) {
        throw ValidationError("line " + std::to_string(line_no) + ": edge weight must be positive");
      }
      if (!weighted) w = 1.0;
    }
    NodeId u = ids.intern(tok[0]);
    NodeId v = ids.intern(tok[1]);
    edges.push_back({u, v, w});
  });
  std::size_t n = ids.size();
  return Graph::from_edges(n, edges, directed, weighted, std::move(ids));
}

void write_edge_list(const Graph& graph, std::ostream& out) {
  auto old_precision = out.precision(17);
  for (const Edge& e : graph.edges()) {
    out << graph.ids().name(e.src) << ' ' << graph.ids().name(e.dst);
    if (graph.weighted()) out << ' ' << e.weight;
    out << '\n';
  }
  out.precision(old_precision);
}

Graph load_attributes(const Graph& graph, std::istream& in) {
  std::vector<Eigen::Triplet<double>> entries;
  long long max_feature = -1;
  detail::for_each_record(in, [&](std::size_t line_no, const std::vector<std::string>& tok) {
    if (tok.size() != 3) throw ParseError(line_no, "expected 'node feature value'");
    auto node = graph.ids().find(tok[0]);
    if (!node) {
      throw ValidationError("line " + std::to_string(line_no) + ": unknown node id '" + tok[0] + "'");
    }
    long long feat = detail::parse_int(tok[1], line_no);
    if (feat < 0) throw ValidationError("line " + std::to_string(line_no) + ": negative feature index");
    double value = detail::parse_double(tok[2], line_no);
    max_feature = std::max(max_feature, feat);
    entries.emplace_back(static_cast<int>(*node), static_cast<int>(feat), value);
  });
  if (max_feature < 0) return graph;
  AttributeMatrix x(static_cast<Eigen::Index>(graph.node_count()), max_feature + 1);
  x.setFromTriplets(entries.begin(), entries.end());
  return graph.with_attributes(std::move(x));
}

Graph load_labels(const Graph& graph, std::istream& in) {
  std::vector<int> labels(graph.node_count(), kUnlabeled);
  detail::for_each_record(in, [&](std::size_t line_no, const std::vector<std::string>& tok) {
    if (tok.size() != 2) throw ParseError(line_no, "expected 'node label'");
    auto node = graph.ids().find(tok[0]);
    if (!node) {
      throw ValidationError("line " + std::to_string(line_no) + ": unknown node id '" + tok[0] + "'");
    }
    long long label = detail::parse_int(tok[1], line_no);
    if (label < 0) throw ValidationError("line " + std::to_string(line_no) + ": labels must be >= 0");
    labels[*node] = static_cast<int>(label);
  });
  return graph.with_labels(std::move(labels));
}

std::vector<int> bfs_distances(const Graph& graph, NodeId source) {
  if (source >= graph.node_count()) throw ValidationError("source node out of range");
  std::vector<int> dist(graph.node_count(), kUnreachable);
  std::deque<NodeId> frontier{source};
  dist[source] = 0;
  while (!frontier.empty()) {
    NodeId u = frontier.front();
    frontier.pop_front();
    for (const Neighbor& n : graph.neighbors(u)) {
      if (dist[n.id] == kUnreachable) {
        dist[n.id] = dist[u] + 1;
        frontier.push_back(n.id);
      }
    }
  }
  return dist;
}

std::optional<int> shortest_path_length(const Graph& graph, NodeId i, NodeId j) {
  if (j >= graph.node_count()) throw ValidationError("target node out of range");
  int d = bfs_distances(graph, i)[j];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

HopBuckets k_hop_neighborhoods(const Graph& graph, NodeId source, int max_hop) {
  if (max_hop < 1) throw ValidationError("K must be >= 1");
  std::vector<int> dist = bfs_distances(graph, source);
  HopBuckets buckets(max_hop);
  for (NodeId j = 0; j < dist.size(); ++j) {
    if (j == source || dist[j] == kUnreachable) continue;
    buckets.bucket(std::min(dist[j], max_hop)).push_back(j);
  }
  return buckets;
}

}  // namespace graphemb
