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

#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "graphemb/error.hpp"
#include "graphemb/graph.hpp"

namespace graphemb {
namespace {

using testing::karate;
using testing::random_graph;

Graph parse(const std::string& text, bool directed = false, bool weighted = false) {
  std::istringstream in(text);
  return load_edge_list(in, directed, weighted);
}

TEST(GraphTest, KarateHas34NodesAnd78Edges) {
  Graph g = karate();
  EXPECT_EQ(g.node_count(), 34u);
  EXPECT_EQ(g.edge_count(), 78u);
  EXPECT_EQ(g.arc_count(), 156u);
  ASSERT_TRUE(g.has_labels());
  int officer = 0;
  for (int l : g.labels()) officer += l;
  EXPECT_EQ(officer, 17);
}

TEST(GraphTest, TriangleIsSymmetric) {
  Graph g = parse("a b\nb c\nc a\n");
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  for (NodeId u = 0; u < 3; ++u) {
    EXPECT_EQ(g.out_degree(u), 2u);
    for (NodeId v = 0; v < 3; ++v) EXPECT_EQ(g.has_edge(u, v), u != v);
  }
}

TEST(GraphTest, DirectedArcsAreOneWay) {
  Graph g = parse("a b\nb c\n", true);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_FALSE(g.has_edge(1, 0));
  EXPECT_EQ(g.arc_count(), 2u);
}

TEST(GraphTest, DuplicateEdgesCollapseOrSum) {
  const std::string text = "a b 2\nb a 3\n";
  Graph binary = parse(text);
  EXPECT_EQ(binary.edge_count(), 1u);
  EXPECT_DOUBLE_EQ(binary.weight(0, 1), 1.0);
  Graph weighted = parse(text, false, true);
  EXPECT_EQ(weighted.edge_count(), 1u);
  EXPECT_DOUBLE_EQ(weighted.weight(0, 1), 5.0);
  EXPECT_DOUBLE_EQ(weighted.weight(1, 0), 5.0);
}

TEST(GraphTest, CommentsAndBlankLinesAreSkipped) {
  Graph g = parse("# header\n\n1 2\n  \n2 3\n");
  EXPECT_EQ(g.node_count(), 3u);
}

TEST(GraphTest, ParseErrorsCarryLineNumber) {
  try {
    parse("a b\na\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse("a b x\n", false, true), ParseError);
  EXPECT_THROW(parse("a b -1\n", false, true), ValidationError);
}

TEST(GraphTest, WriteThenLoadRoundTrips) {
  Graph g = random_graph(30, 0.2, 4, false, true);
  std::stringstream buf;
  write_edge_list(g, buf);
  Graph h = load_edge_list(buf, false, true);
  ASSERT_EQ(h.edge_count(), g.edge_count());
  for (const Edge& e : g.edges()) {
    auto u = h.ids().find(g.ids().name(e.src));
    auto v = h.ids().find(g.ids().name(e.dst));
    ASSERT_TRUE(u && v);
    EXPECT_EQ(h.weight(*u, *v), e.weight);
  }
}

TEST(GraphTest, AttributesAndLabels) {
  Graph g = parse("a b\nb c\n");
  std::istringstream attrs("a 0 1.5\nc 4 2\n");
  Graph ga = load_attributes(g, attrs);
  ASSERT_TRUE(ga.has_attributes());
  EXPECT_EQ(ga.attribute_dim(), 5u);
  EXPECT_DOUBLE_EQ(ga.attributes().coeff(0, 0), 1.5);
  EXPECT_DOUBLE_EQ(ga.attributes().coeff(2, 4), 2.0);
  std::istringstream bad("z 0 1\n");
  EXPECT_THROW(load_attributes(g, bad), ValidationError);

  std::istringstream labels("b 3\n");
  Graph gl = load_labels(g, labels);
  EXPECT_EQ(gl.labels(), (std::vector<int>{kUnlabeled, 3, kUnlabeled}));

  Graph kept = gl.with_edges(std::vector<Edge>{{0, 1, 1.0}});
  EXPECT_TRUE(kept.has_labels());
  EXPECT_EQ(kept.edge_count(), 1u);
}

// Floyd-Warshall over the adjacency matrix.
std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const std::size_t n = g.node_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (NodeId u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (const Neighbor& nb : g.neighbors(u)) d[u][nb.id] = std::min(d[u][nb.id], 1);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x == inf) x = kUnreachable;
  return d;
}

TEST(GraphTest, BfsMatchesFloydWarshall) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const bool directed = seed % 2 == 1;
    Graph g = random_graph(25, 0.08, seed, directed);
    auto oracle = all_pairs(g);
    for (NodeId s = 0; s < g.node_count(); ++s) {
      EXPECT_EQ(bfs_distances(g, s), oracle[s]) << "seed " << seed << " source " << s;
    }
  }
}

TEST(GraphTest, ShortestPathLength) {
  Graph g = parse("a b\nb c\nd e\n");
  EXPECT_EQ(shortest_path_length(g, 0, 2), 2);
  EXPECT_EQ(shortest_path_length(g, 0, 0), 0);
  EXPECT_FALSE(shortest_path_length(g, 0, 3).has_value());
}

TEST(GraphTest, HopBucketsPartitionByDistance) {
  Graph g = random_graph(40, 0.06, 11);
  for (NodeId s = 0; s < g.node_count(); ++s) {
    auto dist = bfs_distances(g, s);
    HopBuckets b = k_hop_neighborhoods(g, s, 3);
    std::size_t expected = 0;
    for (int d : dist) expected += d >= 1 && d != kUnreachable;
    std::size_t total = 0;
    for (int k = 1; k <= 3; ++k) {
      for (NodeId v : b.bucket(k)) EXPECT_EQ(std::min(dist[v], 3), k);
      total += b.bucket(k).size();
    }
    EXPECT_EQ(total, expected);
  }
}

TEST(GraphTest, PathHopBuckets) {
  Graph g = parse("0 1\n1 2\n2 3\n3 4\n");
  HopBuckets b = k_hop_neighborhoods(g, 0, 2);
  EXPECT_EQ(b.bucket(1), (std::vector<NodeId>{1}));
  // The last bucket collects everything at K hops or more.
  EXPECT_EQ(b.bucket(2), (std::vector<NodeId>{2, 3, 4}));
}

}  // namespace
}  // namespace graphemb
