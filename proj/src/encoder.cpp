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

#include "graphemb/encoder.hpp"

#include <cmath>

#include "graphemb/error.hpp"
#include "graphemb/random.hpp"

namespace graphemb {

void EncoderShape::validate() const {
  if (input_dim < 1) throw ValidationError("encoder input dimension must be >= 1");
  if (half_dim < 1) throw ValidationError("encoder output dimension must be >= 1");
  if (hidden.empty()) throw ValidationError("encoder needs at least one hidden layer");
  for (std::size_t h : hidden) {
    if (h < 1) throw ValidationError("hidden layer sizes must be >= 1");
  }
}

EncoderParams::EncoderParams(EncoderShape shape) : shape_(std::move(shape)) {
  shape_.validate();
  std::size_t in = shape_.input_dim;
  std::size_t offset = 0;
  auto add = [&](std::size_t from, std::size_t to) {
    Layer l{from, to, offset, offset + from * to};
    offset += from * to + to;
    layers_.push_back(l);
  };
  for (std::size_t h : shape_.hidden) {
    add(in, h);
    in = h;
  }
  add(in, shape_.half_dim);
  add(in, shape_.half_dim);
  data_.assign(offset, 0.0);
}

EncoderParams EncoderParams::glorot(EncoderShape shape, std::uint64_t seed) {
  EncoderParams p(std::move(shape));
  Rng rng = make_stream(seed, "encoder-init");
  for (std::size_t l = 0; l < p.layers_.size(); ++l) {
    const Layer& layer = p.layers_[l];
    double limit = std::sqrt(6.0 / static_cast<double>(layer.in + layer.out));
    auto w = p.weight(l);
    for (Eigen::Index r = 0; r < w.rows(); ++r) {
      for (Eigen::Index c = 0; c < w.cols(); ++c) w(r, c) = (2.0 * uniform01(rng) - 1.0) * limit;
    }
  }
  return p;
}

Eigen::Map<RowMatrix> EncoderParams::weight(std::size_t layer) {
  const Layer& l = layers_.at(layer);
  return {data_.data() + l.weight_offset, static_cast<Eigen::Index>(l.out), static_cast<Eigen::Index>(l.in)};
}
Eigen::Map<const RowMatrix> EncoderParams::weight(std::size_t layer) const {
  const Layer& l = layers_.at(layer);
  return {data_.data() + l.weight_offset, static_cast<Eigen::Index>(l.out), static_cast<Eigen::Index>(l.in)};
}
Eigen::Map<Eigen::VectorXd> EncoderParams::bias(std::size_t layer) {
  const Layer& l = layers_.at(layer);
  return {data_.data() + l.bias_offset, static_cast<Eigen::Index>(l.out)};
}
Eigen::Map<const Eigen::VectorXd> EncoderParams::bias(std::size_t layer) const {
  const Layer& l = layers_.at(layer);
  return {data_.data() + l.bias_offset, static_cast<Eigen::Index>(l.out)};
}

double sigma_transform(double x) {
  double elu = x > 0.0 ? x : std::expm1(x);
  return elu + 1.0 + 1e-14;
}

namespace {

double sigma_transform_derivative(double x) { return x > 0.0 ? 1.0 : std::exp(x); }

}  // namespace

Encoding encode_batch(const EncoderParams& params, const AttributeMatrix& x, EncoderTrace* trace) {
  if (static_cast<std::size_t>(x.cols()) != params.shape().input_dim) {
    throw ValidationError("encoder input has " + std::to_string(x.cols()) + " columns, expected " +
                          std::to_string(params.shape().input_dim));
  }
  const std::size_t hidden_layers = params.shape().hidden.size();
  RowMatrix h = x * params.weight(0).transpose();
  h.rowwise() += params.bias(0).transpose();
  h = h.cwiseMax(0.0);
  if (trace) trace->hidden.assign(1, h);
  for (std::size_t l = 1; l < hidden_layers; ++l) {
    RowMatrix next = h * params.weight(l).transpose();
    next.rowwise() += params.bias(l).transpose();
    h = next.cwiseMax(0.0);
    if (trace) trace->hidden.push_back(h);
  }
  Encoding out;
  out.mu = h * params.weight(params.mu_head()).transpose();
  out.mu.rowwise() += params.bias(params.mu_head()).transpose();
  RowMatrix pre = h * params.weight(params.sigma_head()).transpose();
  pre.rowwise() += params.bias(params.sigma_head()).transpose();
  out.sigma = pre.unaryExpr([](double v) { return sigma_transform(v); });
  if (trace) trace->sigma_pre = std::move(pre);
  return out;
}

std::pair<std::vector<double>, std::vector<double>> encode(const EncoderParams& params,
                                                          std::span<const double> x) {
  if (x.size() != params.shape().input_dim) throw ValidationError("encoder input has the wrong length");
  AttributeMatrix row(1, static_cast<Eigen::Index>(x.size()));
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x[c] != 0.0) row.insert(0, static_cast<Eigen::Index>(c)) = x[c];
  }
  Encoding e = encode_batch(params, row);
  return {std::vector<double>(e.mu.data(), e.mu.data() + e.mu.size()),
          std::vector<double>(e.sigma.data(), e.sigma.data() + e.sigma.size())};
}

EncoderParams encoder_backward(const EncoderParams& params, const AttributeMatrix& x,
                               const EncoderTrace& trace, const RowMatrix& d_mu, const RowMatrix& d_sigma) {
  EncoderParams grad(params.shape());
  const std::size_t hidden_layers = params.shape().hidden.size();
  const RowMatrix& top = trace.hidden.back();

  RowMatrix d_pre = d_sigma.cwiseProduct(trace.sigma_pre.unaryExpr([](double v) {
    return sigma_transform_derivative(v);
  }));
  grad.weight(params.mu_head()) = d_mu.transpose() * top;
  grad.bias(params.mu_head()) = d_mu.colwise().sum().transpose();
  grad.weight(params.sigma_head()) = d_pre.transpose() * top;
  grad.bias(params.sigma_head()) = d_pre.colwise().sum().transpose();

  RowMatrix d_h = d_mu * params.weight(params.mu_head()) + d_pre * params.weight(params.sigma_head());
  for (std::size_t l = hidden_layers; l-- > 0;) {
    // ReLU mask from the stored activation.
    RowMatrix d_a = d_h.cwiseProduct(trace.hidden[l].unaryExpr([](double v) { return v > 0.0 ? 1.0 : 0.0; }));
    if (l == 0) {
      grad.weight(0) = (x.transpose() * d_a).transpose();
    } else {
      grad.weight(l) = d_a.transpose() * trace.hidden[l - 1];
      d_h = d_a * params.weight(l);
    }
    grad.bias(l) = d_a.colwise().sum().transpose();
  }
  return grad;
}

void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state, double lr) {
  if (grads.size() != params.size()) throw ValidationError("adam: gradient shape does not match parameters");
  if (state.m.empty() && state.v.empty() && state.step == 0) {
    state.m.assign(params.size(), 0.0);
    state.v.assign(params.size(), 0.0);
  }
  if (state.m.size() != params.size() || state.v.size() != params.size()) {
    throw ValidationError("adam: state shape does not match parameters");
  }
  ++state.step;
  const double c1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step));
  const double c2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step));
  for (std::size_t k = 0; k < params.size(); ++k) {
    state.m[k] = state.beta1 * state.m[k] + (1.0 - state.beta1) * grads[k];
    state.v[k] = state.beta2 * state.v[k] + (1.0 - state.beta2) * grads[k] * grads[k];
    double m_hat = state.m[k] / c1;
    double v_hat = state.v[k] / c2;
    params[k] -= lr * m_hat / (std::sqrt(v_hat) + state.epsilon);
  }
}

AttributeMatrix node_features(const Graph& graph) {
  if (graph.has_attributes()) return graph.attributes();
  const auto n = static_cast<Eigen::Index>(graph.node_count());
  AttributeMatrix eye(n, n);
  eye.setIdentity();
  return eye;
}

}  // namespace graphemb
