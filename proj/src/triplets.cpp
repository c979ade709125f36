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

#include "graphemb/triplets.hpp"

#include "graphemb/error.hpp"

namespace graphemb {

HopIndex::HopIndex(const Graph& graph, int max_hop) : max_hop_(max_hop) {
  if (max_hop < 1) throw ValidationError("K must be >= 1");
  buckets_.reserve(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    buckets_.push_back(k_hop_neighborhoods(graph, v, max_hop));
    int non_empty = 0;
    for (int k = 1; k <= max_hop; ++k) non_empty += buckets_.back().bucket(k).empty() ? 0 : 1;
    if (non_empty >= 2) anchors_.push_back(v);
  }
}

std::vector<Triplet> HopIndex::sample(int per_anchor, Rng& rng) const {
  if (per_anchor < 1) throw ValidationError("per_anchor must be >= 1");
  std::vector<Triplet> out;
  for (NodeId a : anchors_) {
    const HopBuckets& b = buckets_[a];
    for (int k = 1; k < max_hop_; ++k) {
      const auto& near = b.bucket(k);
      if (near.empty()) continue;
      for (int l = k + 1; l <= max_hop_; ++l) {
        const auto& far = b.bucket(l);
        if (far.empty()) continue;
        for (int s = 0; s < per_anchor; ++s) {
          NodeId pos = near[uniform_index(rng, near.size())];
          NodeId neg = far[uniform_index(rng, far.size())];
          out.push_back({a, pos, neg, k, l});
        }
      }
    }
  }
  return out;
}

TripletSet sample_triplets(const Graph& graph, int max_hop, int per_anchor, std::uint64_t seed) {
  HopIndex index(graph, max_hop);
  if (index.anchors().empty()) throw ValidationError("no node has two non-empty hop buckets; no triplets exist");
  Rng rng = make_stream(seed, "triplets");
  return {index.sample(per_anchor, rng), max_hop, seed};
}

}  // namespace graphemb
