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

#include "graphemb/g2g.hpp"

#include <cmath>

#include "graphemb/error.hpp"
#include "graphemb/random.hpp"

namespace graphemb {

void G2gConfig::validate() const {
  if (dim < 2 || dim % 2 != 0) throw ValidationError("Gaussian embedding dimension L must be even and >= 2");
  if (max_hop < 2) throw ValidationError("K must be >= 2 to form hop-ordered triplets");
  if (epochs < 0) throw ValidationError("epochs must be >= 0");
  if (!(learning_rate > 0.0)) throw ValidationError("learning rate must be > 0");
  if (per_anchor < 1) throw ValidationError("per_anchor must be >= 1");
}

double g2g_energy(const GaussianEmbedding& embedding, NodeId anchor, NodeId other) {
  return kl_energy(view(embedding, other), view(embedding, anchor));
}

double ranking_satisfaction(const GaussianEmbedding& embedding, std::span<const Triplet> triplets) {
  if (triplets.empty()) return 0.0;
  std::size_t ok = 0;
  for (const Triplet& t : triplets) {
    ok += g2g_energy(embedding, t.anchor, t.positive) < g2g_energy(embedding, t.anchor, t.negative) ? 1 : 0;
  }
  return static_cast<double>(ok) / static_cast<double>(triplets.size());
}

GaussianEmbedding to_gaussian(const Encoding& encoding) {
  GaussianEmbedding e;
  e.count = static_cast<std::size_t>(encoding.mu.rows());
  e.half_dim = static_cast<std::size_t>(encoding.mu.cols());
  e.mu.assign(encoding.mu.data(), encoding.mu.data() + encoding.mu.size());
  e.sigma.assign(encoding.sigma.data(), encoding.sigma.data() + encoding.sigma.size());
  return e;
}

namespace {

// Loss and gradient w.r.t. the encoder outputs.
double output_gradient(const GaussianEmbedding& emb, std::span<const Triplet> triplets, RowMatrix& d_mu,
                       RowMatrix& d_sigma) {
  const auto rows = static_cast<Eigen::Index>(emb.count);
  const auto cols = static_cast<Eigen::Index>(emb.half_dim);
  d_mu = RowMatrix::Zero(rows, cols);
  d_sigma = RowMatrix::Zero(rows, cols);
  double loss = 0.0;
  auto accumulate = [&](const EnergyGrad& g, NodeId other, NodeId anchor, double scale) {
    for (Eigen::Index d = 0; d < cols; ++d) {
      auto k = static_cast<std::size_t>(d);
      d_mu(other, d) += scale * g.d_mu_i[k];
      d_sigma(other, d) += scale * g.d_sigma_i[k];
      d_mu(anchor, d) += scale * g.d_mu_j[k];
      d_sigma(anchor, d) += scale * g.d_sigma_j[k];
    }
  };
  for (const Triplet& t : triplets) {
    EnergyGrad pos = kl_energy_grad(view(emb, t.positive), view(emb, t.anchor));
    EnergyGrad neg = kl_energy_grad(view(emb, t.negative), view(emb, t.anchor));
    double exp_neg = std::exp(-neg.value);
    loss += pos.value * pos.value + exp_neg;
    accumulate(pos, t.positive, t.anchor, 2.0 * pos.value);
    accumulate(neg, t.negative, t.anchor, -exp_neg);
  }
  return loss;
}

}  // namespace

G2gLoss g2g_loss(const EncoderParams& params, const AttributeMatrix& x, std::span<const Triplet> triplets) {
  EncoderTrace trace;
  GaussianEmbedding emb = to_gaussian(encode_batch(params, x, &trace));
  for (const Triplet& t : triplets) {
    if (t.anchor >= emb.count || t.positive >= emb.count || t.negative >= emb.count) {
      throw ValidationError("triplet node out of range");
    }
  }
  RowMatrix d_mu, d_sigma;
  G2gLoss out;
  out.loss = output_gradient(emb, triplets, d_mu, d_sigma);
  out.grad = encoder_backward(params, x, trace, d_mu, d_sigma);
  return out;
}

G2gModel train_g2g(const Graph& graph, const G2gConfig& config, const G2gEpochCallback& on_epoch) {
  config.validate();
  const AttributeMatrix x = node_features(graph);
  EncoderShape shape{static_cast<std::size_t>(x.cols()), config.hidden, config.dim / 2};

  G2gModel model;
  model.params = EncoderParams::glorot(shape, config.seed);
  model.history.dims = shape.half_dim;
  AdamState adam(model.params.data().size());

  if (config.epochs > 0) {
    const HopIndex index(graph, config.max_hop);
    if (index.anchors().empty()) throw ValidationError("no node has two non-empty hop buckets; no triplets exist");
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
      Rng rng = make_stream(config.seed, "triplets", static_cast<std::uint64_t>(epoch));
      std::vector<Triplet> triplets = index.sample(config.per_anchor, rng);

      EncoderTrace trace;
      model.embedding = to_gaussian(encode_batch(model.params, x, &trace));
      model.history.record(model.embedding);
      RowMatrix d_mu, d_sigma;
      model.epoch_loss.push_back(output_gradient(model.embedding, triplets, d_mu, d_sigma));
      EncoderParams grad = encoder_backward(model.params, x, trace, d_mu, d_sigma);
      adam_step(model.params.data(), grad.data(), adam, config.learning_rate);
      if (on_epoch) on_epoch(epoch + 1, model);
    }
  }
  model.embedding = to_gaussian(encode_batch(model.params, x));
  return model;
}

}  // namespace graphemb
