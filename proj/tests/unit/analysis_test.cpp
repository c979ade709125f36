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
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "graphemb/analysis.hpp"
#include "graphemb/error.hpp"
#include "graphemb/random.hpp"

namespace graphemb {
namespace {

// Cyclic Jacobi rotations on a symmetric matrix; returns eigenvalues in
// descending order with matching eigenvector columns.
void jacobi_eigen(Eigen::MatrixXd a, Eigen::VectorXd& values, Eigen::MatrixXd& vectors) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
        r(p, p) = c;
        r(q, q) = c;
        r(p, q) = s;
        r(q, p) = -s;
        a = r.transpose() * a * r;
        v = v * r;
      }
    }
  }
  std::vector<Eigen::Index> order(n);
  for (Eigen::Index i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return a(x, x) > a(y, y); });
  values.resize(n);
  vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    values(i) = a(order[i], order[i]);
    vectors.col(i) = v.col(order[i]);
  }
}

TEST(PcaTest, MatchesJacobiOracle) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng = make_stream(seed, "pca");
    RowMatrix x(40, 5);
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index d = 0; d < x.cols(); ++d) x(i, d) = (d + 1) * (uniform01(rng) - 0.5) + 0.3 * x(i, 0);
    Projection p = pca_project(x, 2);

    Eigen::MatrixXd centered = x.rowwise() - x.colwise().mean();
    Eigen::MatrixXd cov = centered.transpose() * centered / (x.rows() - 1);
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
    jacobi_eigen(cov, values, vectors);
    for (int k = 0; k < 2; ++k) {
      Eigen::Index arg;
      vectors.col(k).cwiseAbs().maxCoeff(&arg);
      if (vectors(arg, k) < 0) vectors.col(k) *= -1;
      EXPECT_NEAR(p.variances[k], values(k), 1e-8);
      Eigen::VectorXd expected = centered * vectors.col(k);
      EXPECT_LE((p.coordinates.col(k) - expected).cwiseAbs().maxCoeff(), 1e-8) << "seed " << seed;
    }
  }
}

TEST(PcaTest, RankOneAndPassThrough) {
  RowMatrix line(5, 3);
  for (int i = 0; i < 5; ++i) line.row(i) << i, 2.0 * i, -1.0 * i;
  Projection p = pca_project(line, 2);
  EXPECT_NEAR(p.variances[1], 0.0, 1e-12);
  EXPECT_LE(p.coordinates.col(1).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(p.variances[0], 2.5 * 6.0, 1e-12);

  RowMatrix two(3, 2);
  two << 1, 2, 3, 4, 5, 9;
  Projection q = pca_project(two, 2);
  RowMatrix centered = two.rowwise() - two.colwise().mean();
  EXPECT_EQ(q.coordinates, centered);
  EXPECT_THROW(pca_project(two, 3), Error);
  EXPECT_THROW(pca_project(two, 0), Error);
}

TEST(UncertaintyTest, TransposesHistory) {
  EmbeddingHistory h;
  h.dims = 2;
  h.mean_sigma = {{2, 4}, {1, 3}, {0.5, 3}};
  UncertaintyCurves c = uncertainty_per_dimension(h);
  ASSERT_EQ(c.curves.size(), 2u);
  EXPECT_EQ(c.curves[0], (std::vector<double>{2, 1, 0.5}));
  EXPECT_EQ(c.curves[1], (std::vector<double>{4, 3, 3}));
  EXPECT_EQ(c.final_sigma, (std::vector<double>{0.5, 3}));
  EXPECT_THROW(uncertainty_per_dimension(EmbeddingHistory{}), Error);
}

// Best split over every subset: the low group is the set with the smaller
// mean log sigma.
IntrinsicDimension exhaustive_split(const std::vector<double>& sigma) {
  const std::size_t n = sigma.size();
  double best = std::numeric_limits<double>::infinity();
  IntrinsicDimension out;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    double s[2] = {0, 0}, ss[2] = {0, 0}, lin[2] = {0, 0};
    int c[2] = {0, 0};
    for (std::size_t i = 0; i < n; ++i) {
      const int g = (mask >> i) & 1;
      const double l = std::log(sigma[i]);
      s[g] += l;
      ss[g] += l * l;
      lin[g] += sigma[i];
      ++c[g];
    }
    const double sse = ss[0] - s[0] * s[0] / c[0] + ss[1] - s[1] * s[1] / c[1];
    if (sse < best - 1e-12) {
      best = sse;
      const int low = s[0] / c[0] < s[1] / c[1] ? 0 : 1;
      out.effective_dims = static_cast<std::size_t>(c[low]);
      out.separation_ratio = (lin[1 - low] / c[1 - low]) / (lin[low] / c[low]);
    }
  }
  return out;
}

TEST(IntrinsicDimensionTest, SplitsTwoLevels) {
  std::vector<double> sigma{3, 0.1, 3, 0.1, 3, 3, 0.1, 3};
  IntrinsicDimension d = intrinsic_dimension_estimate(sigma);
  EXPECT_EQ(d.effective_dims, 3u);
  EXPECT_NEAR(d.separation_ratio, 30.0, 1e-12);
  IntrinsicDimension oracle = exhaustive_split(sigma);
  EXPECT_EQ(oracle.effective_dims, 3u);
}

TEST(IntrinsicDimensionTest, MatchesExhaustiveOracle) {
  Rng rng = make_stream(4, "dims");
  for (int rep = 0; rep < 30; ++rep) {
    std::vector<double> sigma(10);
    for (double& s : sigma) s = std::exp(4 * uniform01(rng) - 2);
    IntrinsicDimension d = intrinsic_dimension_estimate(sigma);
    IntrinsicDimension oracle = exhaustive_split(sigma);
    EXPECT_EQ(d.effective_dims, oracle.effective_dims) << "rep " << rep;
    EXPECT_NEAR(d.separation_ratio, oracle.separation_ratio, 1e-9);
    // Scaling every sigma leaves the split and the ratio unchanged.
    std::vector<double> scaled = sigma;
    for (double& s : scaled) s *= 7.5;
    IntrinsicDimension e = intrinsic_dimension_estimate(scaled);
    EXPECT_EQ(e.effective_dims, d.effective_dims);
    EXPECT_NEAR(e.separation_ratio, d.separation_ratio, 1e-9);
  }
}

TEST(IntrinsicDimensionTest, DegenerateInputs) {
  std::vector<double> flat(6, 0.7);
  IntrinsicDimension d = intrinsic_dimension_estimate(flat);
  EXPECT_EQ(d.effective_dims, 6u);
  EXPECT_EQ(d.separation_ratio, 1.0);
  EXPECT_THROW(intrinsic_dimension_estimate(std::vector<double>{1.0}), Error);
  EXPECT_THROW(intrinsic_dimension_estimate(std::vector<double>{1.0, 0.0}), Error);
}

TEST(StabilityTest, ConstantFromRatios) {
  EXPECT_NEAR(stability_constant_from_ratios(std::vector<double>{0.5, 0.8}), 0.3, 1e-15);
  EXPECT_EQ(stability_constant_from_ratios(std::vector<double>{0.4, 0.4, 0.4}), 0.0);
  EXPECT_THROW(stability_constant_from_ratios(std::vector<double>{0.4}), Error);
}

SnapshotSequence three_snapshots() {
  std::istringstream s0("a b\nb c\n"), s1("a b\nb c\na c\n"), s2("a b\na c\nc d\n");
  std::istream* streams[] = {&s0, &s1, &s2};
  return load_snapshots(streams, {"0", "1", "2"}, false, false);
}

RowMatrix column(std::initializer_list<double> v) {
  RowMatrix m(static_cast<Eigen::Index>(v.size()), 1);
  Eigen::Index i = 0;
  for (double x : v) m(i++, 0) = x;
  return m;
}

TEST(StabilityTest, HandComputedSequence) {
  SnapshotSequence seq = three_snapshots();
  ASSERT_EQ(seq.ids.size(), 4u);
  std::vector<RowMatrix> f{column({1, 2, 2, 5}), column({1, 2, 4, 7}), column({3, 2, 4, 0})};
  StabilityResult r = stability_constant(seq, f);
  // 0 -> 1 over {a, b, c}: embedding change 2/3, adjacency change sqrt(2)/2.
  const double r0 = (2.0 / 3.0) / (std::sqrt(2.0) / 2.0);
  // 1 -> 2 over {a, b, c}: embedding change 2/sqrt(21), adjacency change
  // sqrt(2)/sqrt(6) once c-d is dropped.
  const double r1 = (2.0 / std::sqrt(21.0)) / (std::sqrt(2.0) / std::sqrt(6.0));
  ASSERT_EQ(r.ratios.size(), 2u);
  EXPECT_NEAR(r.ratios[0], r0, 1e-9);
  EXPECT_NEAR(r.ratios[1], r1, 1e-9);
  EXPECT_NEAR(r.constant, std::abs(r0 - r1), 1e-9);
}

TEST(StabilityTest, UnchangedAdjacencyIsUndefined) {
  std::istringstream s0("a b\n"), s1("a b\n"), s2("a b\nb c\n");
  std::istream* streams[] = {&s0, &s1, &s2};
  SnapshotSequence seq = load_snapshots(streams, {"0", "1", "2"}, false, false);
  std::vector<RowMatrix> f{column({1, 2, 3}), column({1, 2, 3}), column({1, 2, 3})};
  try {
    stability_constant(seq, f);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "undefined relative stability");
  }
}

TEST(StabilityTest, RestrictedAdjacency) {
  SnapshotSequence seq = three_snapshots();
  std::vector<NodeId> keep{2, 0};
  RowMatrix a = restricted_adjacency(seq.snapshots[1], keep);
  RowMatrix expected(2, 2);
  expected << 0, 1, 1, 0;
  EXPECT_EQ(a, expected);
}

}  // namespace
}  // namespace graphemb
