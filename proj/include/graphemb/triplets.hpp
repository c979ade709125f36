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
#include <vector>

#include "graphemb/graph.hpp"
#include "graphemb/random.hpp"

namespace graphemb {

// (anchor, positive, negative) with sp(anchor, positive) < sp(anchor, negative).
struct Triplet {
  NodeId anchor{0};
  NodeId positive{0};
  NodeId negative{0};
  int positive_hop{0};
  int negative_hop{0};

  friend auto operator<=>(const Triplet&, const Triplet&) = default;
};

struct TripletSet {
  std::vector<Triplet> triplets;
  int max_hop{2};
  std::uint64_t seed{0};
};

// Hop buckets for every node, computed once and resampled each epoch.
class HopIndex {
 public:
  HopIndex(const Graph& graph, int max_hop);

  int max_hop() const noexcept { return max_hop_; }
  const HopBuckets& buckets(NodeId anchor) const { return buckets_[anchor]; }
  // Anchors with at least two non-empty buckets.
  const std::vector<NodeId>& anchors() const noexcept { return anchors_; }

  // For every anchor and every hop pair k < l with non-empty buckets, draws
  // per_anchor (positive, negative) pairs uniformly from the two buckets.
  std::vector<Triplet> sample(int per_anchor, Rng& rng) const;

 private:
  int max_hop_;
  std::vector<HopBuckets> buckets_;
  std::vector<NodeId> anchors_;
};

// Throws ValidationError when no node has two non-empty hop buckets.
TripletSet sample_triplets(const Graph& graph, int max_hop, int per_anchor, std::uint64_t seed);

}  // namespace graphemb
