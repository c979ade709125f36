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
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "graphemb/graph.hpp"

namespace graphemb {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct EncoderShape {
  std::size_t input_dim{0};
  std::vector<std::size_t> hidden{512};
  std::size_t half_dim{0};

  void validate() const;
  friend bool operator==(const EncoderShape&, const EncoderShape&) = default;
};

// Feed-forward encoder: input -> ReLU hidden layers -> two linear heads.
// The mu head is used as is; the sigma head goes through elu(x) + 1 + 1e-14.
// All weights and biases live in one flat buffer so optimizers and gradient
// checks can treat them as a single vector.
class EncoderParams {
 public:
  EncoderParams() = default;
  explicit EncoderParams(EncoderShape shape);  // all zeros

  // Glorot-uniform weights, zero biases.
  static EncoderParams glorot(EncoderShape shape, std::uint64_t seed);

  const EncoderShape& shape() const noexcept { return shape_; }
  std::size_t layer_count() const noexcept { return layers_.size(); }
  std::size_t mu_head() const noexcept { return layers_.size() - 2; }
  std::size_t sigma_head() const noexcept { return layers_.size() - 1; }

  Eigen::Map<RowMatrix> weight(std::size_t layer);
  Eigen::Map<const RowMatrix> weight(std::size_t layer) const;
  Eigen::Map<Eigen::VectorXd> bias(std::size_t layer);
  Eigen::Map<const Eigen::VectorXd> bias(std::size_t layer) const;

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

 private:
  struct Layer {
    std::size_t in{0}, out{0}, weight_offset{0}, bias_offset{0};
  };
  EncoderShape shape_;
  std::vector<Layer> layers_;
  std::vector<double> data_;
};

double sigma_transform(double x);

// Node-major outputs (rows = nodes, cols = half_dim).
struct Encoding {
  RowMatrix mu;
  RowMatrix sigma;
};

// Intermediate values kept for backpropagation.
struct EncoderTrace {
  std::vector<RowMatrix> hidden;  // post-ReLU activations per hidden layer
  RowMatrix sigma_pre;
};

Encoding encode_batch(const EncoderParams& params, const AttributeMatrix& x, EncoderTrace* trace = nullptr);

// Single dense input row.
std::pair<std::vector<double>, std::vector<double>> encode(const EncoderParams& params,
                                                          std::span<const double> x);

// Gradient of a scalar loss w.r.t. all parameters given its gradient
// w.r.t. the outputs of encode_batch(params, x, &trace).
EncoderParams encoder_backward(const EncoderParams& params, const AttributeMatrix& x,
                               const EncoderTrace& trace, const RowMatrix& d_mu, const RowMatrix& d_sigma);

// Bias-corrected Adam over a flat parameter vector.
struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::int64_t step{0};
  double beta1{0.9};
  double beta2{0.999};
  double epsilon{1e-8};

  AdamState() = default;
  explicit AdamState(std::size_t size) : m(size, 0.0), v(size, 0.0) {}
};

void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state, double lr);

// The graph's attributes, or one-hot identity rows when it has none.
AttributeMatrix node_features(const Graph& graph);

}  // namespace graphemb
