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

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "graphemb/clustering.hpp"
#include "graphemb/error.hpp"
#include "graphemb/random.hpp"

namespace graphemb {
namespace {

using testing::silhouette_oracle;
RowMatrix random_points(int n, int dim, std::uint64_t seed) {
  Rng rng = make_stream(seed, "points");
  RowMatrix x(n, dim);
  for (int i = 0; i < n; ++i)
    for (int d = 0; d < dim; ++d) x(i, d) = 4.0 * uniform01(rng) + (i % 3) * 2.0;
  return x;
}

// Smallest inertia over every assignment of n points to k labeled groups
// with no group empty.
double exhaustive_min_inertia(const RowMatrix& x, int k) {
  const int n = static_cast<int>(x.rows());
  std::vector<int> a(n, 0);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    std::vector<bool> used(k, false);
    for (int v : a) used[v] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) best = std::min(best, inertia(x, a));
    int i = 0;
    while (i < n && ++a[i] == k) a[i++] = 0;
    if (i == n) break;
  }
  return best;
}

TEST(KMeansTest, SeparatesFarPairs) {
  RowMatrix x(4, 2);
  x << 0, 0, 0.1, 0, 10, 10, 10.1, 10;
  KMeansResult r = kmeans(x, 2, 1);
  EXPECT_EQ(r.assignments[0], r.assignments[1]);
  EXPECT_EQ(r.assignments[2], r.assignments[3]);
  EXPECT_NE(r.assignments[0], r.assignments[2]);
  EXPECT_NEAR(r.inertia, 4 * 0.05 * 0.05, 1e-12);
}

TEST(KMeansTest, OnePointPerClusterHasZeroInertia) {
  RowMatrix x = random_points(7, 3, 2);
  KMeansResult r = kmeans(x, 7, 1);
  EXPECT_EQ(r.inertia, 0.0);
  std::vector<int> sorted = r.assignments;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 7; ++i) EXPECT_EQ(sorted[i], i);
}

TEST(KMeansTest, MatchesExhaustiveOptimum) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RowMatrix x = random_points(10, 2, seed);
    const double oracle = exhaustive_min_inertia(x, 3);
    KMeansResult r = kmeans(x, 3, seed, 300, 100);
    EXPECT_NEAR(r.inertia, oracle, 1e-9) << "seed " << seed;
    EXPECT_NEAR(inertia(x, r.assignments), r.inertia, 1e-9);
  }
}

TEST(KMeansTest, DeterministicAndValidated) {
  RowMatrix x = random_points(30, 2, 3);
  EXPECT_EQ(kmeans(x, 3, 5).assignments, kmeans(x, 3, 5).assignments);
  EXPECT_THROW(kmeans(x, 31, 1), Error);
  EXPECT_THROW(kmeans(x, 0, 1), Error);
}

TEST(SilhouetteTest, MatchesQuadraticOracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RowMatrix x = random_points(10, 3, seed);
    std::vector<int> a{0, 1, 2, 0, 1, 2, 0, 1, 2, 2};
    if (seed % 2) a[0] = 3;  // adds a singleton cluster
    const double s = silhouette(x, a);
    EXPECT_NEAR(s, silhouette_oracle(x, a), 1e-9);
    EXPECT_GE(s, -1.0);
    EXPECT_LE(s, 1.0);
  }
}

TEST(SilhouetteTest, TightClustersScoreHigh) {
  RowMatrix x(6, 1);
  x << 0, 0.01, 0.02, 10, 10.01, 10.02;
  EXPECT_GT(silhouette(x, std::vector<int>{0, 0, 0, 1, 1, 1}), 0.9);
  EXPECT_LT(silhouette(x, std::vector<int>{0, 1, 0, 1, 0, 1}), 0.0);
  EXPECT_THROW(silhouette(x, std::vector<int>(6, 0)), Error);
}

TEST(AgreementTest, IdenticalAndConstant) {
  std::vector<int> t{0, 0, 1, 1, 2, 2};
  std::vector<int> relabeled{2, 2, 0, 0, 1, 1};
  AgreementScores same = nmi_and_accuracy(relabeled, t);
  EXPECT_NEAR(same.nmi, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(same.accuracy, 1.0);
  std::vector<int> two{0, 0, 0, 1, 1, 1};
  AgreementScores flat = nmi_and_accuracy(std::vector<int>(6, 4), two);
  EXPECT_NEAR(flat.nmi, 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(flat.accuracy, 0.5);
}

double entropy(const std::vector<int>& a) {
  std::map<int, double> c;
  for (int v : a) c[v] += 1;
  double h = 0;
  for (auto& [k, n] : c) h -= n / a.size() * std::log(n / a.size());
  return h;
}

TEST(AgreementTest, MatchesPermutationOracle) {
  std::vector<int> truth{0, 0, 0, 1, 1, 2, 2, 2};
  std::vector<int> pred{1, 1, 0, 0, 0, 2, 2, 1};
  // Accuracy: best over every relabeling of the three predicted clusters.
  std::vector<int> perm{0, 1, 2};
  int best = 0;
  do {
    int hits = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) hits += perm[pred[i]] == truth[i];
    best = std::max(best, hits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // NMI via I = H(a) + H(b) - H(a, b).
  std::vector<int> joint(truth.size());
  for (std::size_t i = 0; i < truth.size(); ++i) joint[i] = truth[i] * 10 + pred[i];
  const double mi = entropy(truth) + entropy(pred) - entropy(joint);
  AgreementScores s = nmi_and_accuracy(pred, truth);
  EXPECT_NEAR(s.nmi, mi / ((entropy(truth) + entropy(pred)) / 2), 1e-12);
  EXPECT_DOUBLE_EQ(s.accuracy, best / 8.0);
  EXPECT_THROW(nmi_and_accuracy(pred, std::vector<int>{0}), Error);
}

TEST(MatchingTest, MatchesBruteForce) {
  Rng rng = make_stream(7, "match");
  for (int rep = 0; rep < 20; ++rep) {
    const int rows = 1 + static_cast<int>(uniform_index(rng, 5));
    const int cols = 1 + static_cast<int>(uniform_index(rng, 5));
    std::vector<std::vector<double>> w(rows, std::vector<double>(cols));
    for (auto& r : w)
      for (double& v : r) v = std::floor(uniform01(rng) * 10);
    std::vector<int> m = max_weight_matching(w);
    ASSERT_EQ(static_cast<int>(m.size()), rows);
    double got = 0;
    std::vector<bool> used(cols, false);
    for (int r = 0; r < rows; ++r) {
      if (m[r] < 0) continue;
      ASSERT_FALSE(used[m[r]]);
      used[m[r]] = true;
      got += w[r][m[r]];
    }
    // Oracle: permutations of max(rows, cols) slots, slot >= cols means unmatched.
    const int slots = std::max(rows, cols);
    std::vector<int> p(slots);
    std::iota(p.begin(), p.end(), 0);
    double best = 0;
    do {
      double total = 0;
      for (int r = 0; r < rows; ++r)
        if (p[r] < cols) total += w[r][p[r]];
      best = std::max(best, total);
    } while (std::next_permutation(p.begin(), p.end()));
    EXPECT_DOUBLE_EQ(got, best) << "rep " << rep;
  }
}

}  // namespace
}  // namespace graphemb
