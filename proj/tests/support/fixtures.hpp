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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "graphemb/graph.hpp"
#include "graphemb/random.hpp"

namespace graphemb::testing {

inline std::string data_path(const std::string& name) { return std::string(GRAPHEMB_DATA_DIR) + "/" + name; }

inline Graph karate() {
  std::ifstream edges(data_path("karate.edgelist"));
  Graph g = load_edge_list(edges, false, false);
  std::ifstream labels(data_path("karate.labels"));
  return load_labels(g, labels);
}

// G(n, p) with ids "0".."n-1" interned in order.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed, bool directed = false, bool weighted = false) {
  Rng rng = make_stream(seed, "fixture-graph");
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v) continue;
      if (uniform01(rng) < p) edges.push_back({u, v, weighted ? 0.5 + 2.0 * uniform01(rng) : 1.0});
    }
  }
  return Graph::from_edges(n, edges, directed, weighted, IdMap::identity(n));
}

inline std::vector<double> random_vector(std::size_t n, Rng& rng, double lo = -1.0, double hi = 1.0) {
  std::vector<double> v(n);
  for (double& x : v) x = lo + (hi - lo) * uniform01(rng);
  return v;
}

// Central differences of f at x, one coordinate at a time.
inline std::vector<double> numeric_gradient(std::vector<double> x, const std::function<double(std::span<const double>)>& f,
                                            double h = 1e-5) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double keep = x[i];
    x[i] = keep + h;
    const double up = f(x);
    x[i] = keep - h;
    const double down = f(x);
    x[i] = keep;
    g[i] = (up - down) / (2.0 * h);
  }
  return g;
}

// ||a - b|| / max(||a||, ||b||), zero when both vanish.
inline double relative_error(std::span<const double> a, std::span<const double> b) {
  double diff = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff += (a[i] - b[i]) * (a[i] - b[i]);
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  const double scale = std::sqrt(std::max(na, nb));
  return scale == 0.0 ? 0.0 : std::sqrt(diff) / scale;
}

}  // namespace graphemb::testing
