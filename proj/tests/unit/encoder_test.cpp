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

#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "graphemb/encoder.hpp"
#include "graphemb/error.hpp"

namespace graphemb {
namespace {

using testing::numeric_gradient;
using testing::random_vector;
using testing::relative_error;

AttributeMatrix dense_input(std::size_t rows, std::size_t cols, Rng& rng) {
  AttributeMatrix x(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  std::vector<Eigen::Triplet<double>> entries;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (uniform01(rng) < 0.7) entries.emplace_back(static_cast<int>(r), static_cast<int>(c), 2.0 * uniform01(rng) - 1.0);
  x.setFromTriplets(entries.begin(), entries.end());
  return x;
}

TEST(EncoderTest, OutputShapes) {
  EncoderParams p = EncoderParams::glorot({6, {8}, 2}, 1);
  auto [mu, sigma] = encode(p, std::vector<double>(6, 0.5));
  EXPECT_EQ(mu.size(), 2u);
  EXPECT_EQ(sigma.size(), 2u);
  for (double s : sigma) EXPECT_GT(s, 0.0);
}

TEST(EncoderTest, ZeroParametersGiveZeroMeanAndUnitVariance) {
  EncoderParams p({5, {4, 3}, 3});
  auto [mu, sigma] = encode(p, std::vector<double>{1, 2, 3, 4, 5});
  for (double m : mu) EXPECT_EQ(m, 0.0);
  for (double s : sigma) EXPECT_EQ(s, sigma_transform(0.0));
  EXPECT_EQ(sigma_transform(0.0), 1.0 + 1e-14);
  EXPECT_GT(sigma_transform(-50.0), 0.0);
}

TEST(EncoderTest, BatchAndRowAgree) {
  Rng rng = make_stream(2, "enc");
  EncoderParams p = EncoderParams::glorot({7, {5}, 2}, 3);
  AttributeMatrix x = dense_input(4, 7, rng);
  Encoding batch = encode_batch(p, x);
  for (Eigen::Index r = 0; r < 4; ++r) {
    Eigen::RowVectorXd row = Eigen::RowVectorXd(x.row(r));
    auto [mu, sigma] = encode(p, std::span<const double>(row.data(), 7));
    for (Eigen::Index d = 0; d < 2; ++d) {
      EXPECT_NEAR(batch.mu(r, d), mu[static_cast<std::size_t>(d)], 1e-14);
      EXPECT_NEAR(batch.sigma(r, d), sigma[static_cast<std::size_t>(d)], 1e-14);
    }
  }
}

TEST(EncoderTest, BackwardMatchesFiniteDifferences) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng = make_stream(seed, "enc-fd");
    const std::size_t input = 3 + seed % 8, half = 1 + seed % 3;
    const EncoderShape shape{input, {4 + seed % 3}, half};
    EncoderParams p = EncoderParams::glorot(shape, seed);
    // Non-zero biases so the ReLU pattern is not trivially all-active.
    for (std::size_t l = 0; l < p.layer_count(); ++l) {
      auto b = p.bias(l);
      for (Eigen::Index k = 0; k < b.size(); ++k) b(k) = 0.3 * (2.0 * uniform01(rng) - 1.0);
    }
    AttributeMatrix x = dense_input(5, input, rng);
    RowMatrix a_mu(5, static_cast<Eigen::Index>(half)), a_sigma(5, static_cast<Eigen::Index>(half));
    for (Eigen::Index k = 0; k < a_mu.size(); ++k) {
      a_mu.data()[k] = 2.0 * uniform01(rng) - 1.0;
      a_sigma.data()[k] = 2.0 * uniform01(rng) - 1.0;
    }
    auto loss = [&](std::span<const double> flat) {
      EncoderParams q = p;
      std::copy(flat.begin(), flat.end(), q.data().begin());
      Encoding e = encode_batch(q, x);
      return (e.mu.array() * a_mu.array()).sum() + (e.sigma.array() * a_sigma.array()).sum();
    };
    EncoderTrace trace;
    encode_batch(p, x, &trace);
    EncoderParams grad = encoder_backward(p, x, trace, a_mu, a_sigma);
    std::vector<double> flat(p.data().begin(), p.data().end());
    std::vector<double> analytic(grad.data().begin(), grad.data().end());
    EXPECT_LE(relative_error(analytic, numeric_gradient(flat, loss)), 1e-4) << "seed " << seed;
  }
}

TEST(EncoderTest, ShapeValidation) {
  EXPECT_THROW(EncoderParams({0, {4}, 2}), ValidationError);
  EXPECT_THROW(EncoderParams({4, {}, 2}), ValidationError);
  EXPECT_THROW(EncoderParams({4, {4}, 0}), ValidationError);
}

TEST(AdamTest, ZeroGradientLeavesParameters) {
  std::vector<double> params{1.0, -2.0, 3.0}, grads(3, 0.0);
  AdamState s(3);
  for (int k = 0; k < 5; ++k) adam_step(params, grads, s, 0.1);
  EXPECT_EQ(params, (std::vector<double>{1.0, -2.0, 3.0}));
}

TEST(AdamTest, FirstStepMovesByLearningRate) {
  // Bias correction makes m_hat = g and v_hat = g^2 after one step, so the
  // update is lr * g / (|g| + eps).
  std::vector<double> params{0.0, 0.0}, grads{0.3, -5.0};
  AdamState s(2);
  adam_step(params, grads, s, 1e-3);
  EXPECT_NEAR(params[0], -1e-3 * 0.3 / (0.3 + 1e-8), 1e-15);
  EXPECT_NEAR(params[1], 1e-3 * 5.0 / (5.0 + 1e-8), 1e-15);
}

TEST(AdamTest, MomentsDecayAfterGradientsStop) {
  std::vector<double> params{0.0}, g{1.0}, zero{0.0};
  AdamState s(1);
  adam_step(params, g, s, 0.01);
  const double m1 = std::abs(s.m[0]), v1 = s.v[0];
  for (int k = 0; k < 50; ++k) adam_step(params, zero, s, 0.01);
  EXPECT_LT(std::abs(s.m[0]), m1 * 0.01);
  EXPECT_LT(s.v[0], v1);
}

TEST(FeaturesTest, OneHotFallback) {
  Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1, 1.0}}, false, false);
  AttributeMatrix x = node_features(g);
  EXPECT_EQ(x.rows(), 3);
  EXPECT_EQ(x.cols(), 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) EXPECT_EQ(x.coeff(r, c), r == c ? 1.0 : 0.0);
}

}  // namespace
}  // namespace graphemb
