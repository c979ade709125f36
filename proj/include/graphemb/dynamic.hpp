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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "graphemb/error.hpp"
#include "graphemb/graph.hpp"

namespace graphemb {

struct TemporalEdge {
  NodeId src{0};
  NodeId dst{0};
  double time{0.0};
};

// Continuous-time graph: edges carry a non-negative timestamp.
class TemporalGraph {
 public:
  TemporalGraph(std::size_t node_count, std::vector<TemporalEdge> edges, bool directed = false,
                IdMap ids = {});

  std::size_t node_count() const noexcept { return node_count_; }
  bool directed() const noexcept { return directed_; }
  const std::vector<TemporalEdge>& edges() const noexcept { return edges_; }
  const IdMap& ids() const noexcept { return ids_; }

  bool has_edge_at(NodeId u, NodeId v, double time) const;

 private:
  std::size_t node_count_;
  bool directed_;
  std::vector<TemporalEdge> edges_;  // sorted by (src, dst, time)
  IdMap ids_;
};

// "src dst time" rows.
TemporalGraph load_temporal_edges(std::istream& in, bool directed = false);

// One step of a temporal walk: the node reached and the time of the edge
// used to reach it. The first step's time is ignored.
struct TemporalStep {
  NodeId node{0};
  double time{0.0};
};

// Raised when a walk uses a pair that is not an edge at the stated time,
// as opposed to a walk whose edges are fine but out of order.
class InvalidTemporalEdge : public Error {
 public:
  using Error::Error;
};

// True iff edge times along the walk are non-decreasing (ties allowed).
bool is_temporally_valid_walk(const TemporalGraph& graph, std::span<const TemporalStep> walk);

// Ordered snapshots over one shared id universe. present(t)[v] says whether
// node v occurs in snapshot t.
struct SnapshotSequence {
  std::vector<Graph> snapshots;
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> present;
  IdMap ids;
};

// Reads every regular file in dir as an edge list, ordered by file name.
SnapshotSequence load_snapshot_dir(const std::filesystem::path& dir, bool directed, bool weighted);

// Builds a sequence from in-memory streams (used by the loader and tests).
SnapshotSequence load_snapshots(std::span<std::istream*> streams, std::vector<std::string> labels,
                                bool directed, bool weighted);

}  // namespace graphemb
