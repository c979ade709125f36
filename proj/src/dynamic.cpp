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

#include "graphemb/dynamic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <tuple>

#include "text_records.hpp"

namespace graphemb {

namespace {

auto edge_key(const TemporalEdge& e) { return std::tuple{e.src, e.dst, e.time}; }

}  // namespace

TemporalGraph::TemporalGraph(std::size_t node_count, std::vector<TemporalEdge> edges, bool directed,
                             IdMap ids)
    : node_count_(node_count), directed_(directed), edges_(std::move(edges)), ids_(std::move(ids)) {
  for (TemporalEdge& e : edges_) {
    if (e.src >= node_count_ || e.dst >= node_count_) throw ValidationError("temporal edge endpoint out of range");
    if (!std::isfinite(e.time) || e.time < 0.0) throw ValidationError("edge times must be finite and >= 0");
    if (!directed_ && e.dst < e.src) std::swap(e.src, e.dst);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const TemporalEdge& a, const TemporalEdge& b) { return edge_key(a) < edge_key(b); });
  if (ids_.size() == 0) ids_ = IdMap::identity(node_count_);
}

bool TemporalGraph::has_edge_at(NodeId u, NodeId v, double time) const {
  if (!directed_ && v < u) std::swap(u, v);
  TemporalEdge probe{u, v, time};
  return std::binary_search(edges_.begin(), edges_.end(), probe,
                            [](const TemporalEdge& a, const TemporalEdge& b) { return edge_key(a) < edge_key(b); });
}

TemporalGraph load_temporal_edges(std::istream& in, bool directed) {
  IdMap ids;
  std::vector<TemporalEdge> edges;
  detail::for_each_record(in, [&](std::size_t line_no, const std::vector<std::string>& tok) {
    if (tok.size() != 3) throw ParseError(line_no, "expected 'src dst time'");
    double t = detail::parse_double(tok[2], line_no);
    if (t < 0.0) throw ValidationError("line " + std::to_string(line_no) + ": negative edge time");
    NodeId u = ids.intern(tok[0]);
    NodeId v = ids.intern(tok[1]);
    edges.push_back({u, v, t});
  });
  std::size_t n = ids.size();
  return TemporalGraph(n, std::move(edges), directed, std::move(ids));
}

bool is_temporally_valid_walk(const TemporalGraph& graph, std::span<const TemporalStep> walk) {
  if (walk.empty()) throw ValidationError("temporal walk must be non-empty");
  for (const TemporalStep& s : walk) {
    if (s.node >= graph.node_count()) throw ValidationError("walk node out of range");
  }
  bool ordered = true;
  for (std::size_t i = 1; i < walk.size(); ++i) {
    if (!graph.has_edge_at(walk[i - 1].node, walk[i].node, walk[i].time)) {
      throw InvalidTemporalEdge("step " + std::to_string(i) + " is not an edge at the stated time");
    }
    if (i >= 2 && walk[i].time < walk[i - 1].time) ordered = false;
  }
  return ordered;
}

SnapshotSequence load_snapshots(std::span<std::istream*> streams, std::vector<std::string> labels,
                                bool directed, bool weighted) {
  if (labels.size() != streams.size()) throw ValidationError("one label per snapshot required");
  SnapshotSequence seq;
  std::vector<std::vector<Edge>> edge_lists(streams.size());
  std::vector<std::vector<NodeId>> seen(streams.size());
  for (std::size_t t = 0; t < streams.size(); ++t) {
    detail::for_each_record(*streams[t], [&](std::size_t line_no, const std::vector<std::string>& tok) {
      if (tok.size() != 2 && tok.size() != 3) throw ParseError(line_no, "expected 'src dst [weight]'");
      double w = 1.0;
      if (tok.size() == 3) {
        w = detail::parse_double(tok[2], line_no);
        if (w <= 0.0) throw ValidationError("line " + std::to_string(line_no) + ": edge weight must be positive");
        if (!weighted) w = 1.0;
      }
      NodeId u = seq.ids.intern(tok[0]);
      NodeId v = seq.ids.intern(tok[1]);
      edge_lists[t].push_back({u, v, w});
      seen[t].push_back(u);
      seen[t].push_back(v);
    });
  }
  const std::size_t n = seq.ids.size();
  for (std::size_t t = 0; t < streams.size(); ++t) {
    seq.snapshots.push_back(Graph::from_edges(n, edge_lists[t], directed, weighted, seq.ids));
    std::vector<bool> present(n, false);
    for (NodeId v : seen[t]) present[v] = true;
    seq.present.push_back(std::move(present));
  }
  seq.labels = std::move(labels);
  return seq;
}

SnapshotSequence load_snapshot_dir(const std::filesystem::path& dir, bool directed, bool weighted) {
  if (!std::filesystem::is_directory(dir)) throw ValidationError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::ifstream> owned;
  owned.reserve(files.size());
  std::vector<std::istream*> streams;
  std::vector<std::string> labels;
  for (const auto& f : files) {
    owned.emplace_back(f);
    if (!owned.back()) throw ValidationError("cannot open " + f.string());
    streams.push_back(&owned.back());
    labels.push_back(f.filename().string());
  }
  return load_snapshots(streams, std::move(labels), directed, weighted);
}

}  // namespace graphemb
