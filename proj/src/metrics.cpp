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

#include "graphemb/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "graphemb/error.hpp"
#include "graphemb/random.hpp"

namespace graphemb {

double similarity(std::span<const double> zi, std::span<const double> zj, Similarity kind) {
  if (zi.size() != zj.size()) throw ValidationError("similarity: vectors differ in length");
  double dot = 0.0, ni = 0.0, nj = 0.0, dist = 0.0;
  for (std::size_t d = 0; d < zi.size(); ++d) {
    dot += zj[d] * zi[d];
    ni += zi[d] * zi[d];
    nj += zj[d] * zj[d];
    double diff = zi[d] - zj[d];
    dist += diff * diff;
  }
  switch (kind) {
    case Similarity::kDot:
      return dot;
    case Similarity::kCosine:
      if (ni == 0.0 || nj == 0.0) throw ValidationError("cosine similarity of a zero vector");
      return dot / (std::sqrt(ni) * std::sqrt(nj));
    case Similarity::kEuclidean:
      return std::sqrt(dist);
  }
  return 0.0;
}

LinkPredictionScores link_prediction(std::span<const LabeledScore> scored) {
  std::size_t n_pos = 0;
  for (const auto& s : scored) {
    if (s.label != 0 && s.label != 1) throw ValidationError("link labels must be 0 or 1");
    if (!std::isfinite(s.score)) throw ValidationError("link scores must be finite");
    n_pos += static_cast<std::size_t>(s.label);
  }
  const std::size_t n_neg = scored.size() - n_pos;
  if (n_pos == 0 || n_neg == 0) throw ValidationError("link prediction needs both positive and negative pairs");

  std::vector<std::size_t> order(scored.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scored[a].score < scored[b].score; });

  // Mid-ranks for ties.
  double pos_rank_sum = 0.0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && scored[order[j]].score == scored[order[i]].score) ++j;
    double mid = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) {
      if (scored[order[k]].label == 1) pos_rank_sum += mid;
    }
    i = j;
  }
  const double np = static_cast<double>(n_pos), nn = static_cast<double>(n_neg);
  LinkPredictionScores out;
  out.auc = (pos_rank_sum - np * (np + 1.0) / 2.0) / (np * nn);

  // Descending thresholds; one precision/recall point per distinct score.
  double tp = 0.0, fp = 0.0, prev_recall = 0.0, ap = 0.0;
  for (std::size_t i = order.size(); i > 0;) {
    std::size_t j = i;
    const double s = scored[order[i - 1]].score;
    while (j > 0 && scored[order[j - 1]].score == s) {
      (scored[order[j - 1]].label == 1 ? tp : fp) += 1.0;
      --j;
    }
    double recall = tp / np;
    double precision = tp / (tp + fp);
    ap += (recall - prev_recall) * precision;
    prev_recall = recall;
    i = j;
  }
  out.ap = ap;
  return out;
}

ClassificationScores f1_scores(std::span<const int> truth, std::span<const int> predicted) {
  if (truth.size() != predicted.size()) throw ValidationError("f1: label vectors differ in length");
  if (truth.empty()) throw ValidationError("f1: no samples");
  std::set<int> classes(truth.begin(), truth.end());
  classes.insert(predicted.begin(), predicted.end());
  std::size_t correct = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) correct += truth[i] == predicted[i] ? 1 : 0;
  ClassificationScores out;
  out.f1_micro = static_cast<double>(correct) / static_cast<double>(truth.size());
  double macro = 0.0;
  for (int c : classes) {
    double tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
      bool t = truth[i] == c, p = predicted[i] == c;
      tp += (t && p) ? 1 : 0;
      fp += (!t && p) ? 1 : 0;
      fn += (t && !p) ? 1 : 0;
    }
    double denom = 2 * tp + fp + fn;
    macro += denom > 0 ? 2 * tp / denom : 0.0;
  }
  out.f1_macro = macro / static_cast<double>(classes.size());
  return out;
}

namespace {

struct LogisticModel {
  Eigen::MatrixXd weights;  // classes x features
  Eigen::VectorXd bias;
};

LogisticModel fit_logistic(const RowMatrix& x, const std::vector<int>& y, int classes, double l2, int steps) {
  const auto n = x.rows(), d = x.cols();
  LogisticModel m{Eigen::MatrixXd::Zero(classes, d), Eigen::VectorXd::Zero(classes)};
  Eigen::MatrixXd onehot = Eigen::MatrixXd::Zero(n, classes);
  for (Eigen::Index i = 0; i < n; ++i) onehot(i, y[static_cast<std::size_t>(i)]) = 1.0;
  double max_sq = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) max_sq = std::max(max_sq, x.row(i).squaredNorm() + 1.0);
  const double lr = 1.0 / (0.5 * max_sq + l2);
  for (int s = 0; s < steps; ++s) {
    Eigen::MatrixXd logits = x * m.weights.transpose();
    logits.rowwise() += m.bias.transpose();
    for (Eigen::Index i = 0; i < n; ++i) {
      double mx = logits.row(i).maxCoeff();
      logits.row(i) = (logits.row(i).array() - mx).exp();
      logits.row(i) /= logits.row(i).sum();
    }
    Eigen::MatrixXd residual = (logits - onehot) / static_cast<double>(n);
    Eigen::MatrixXd grad_w = residual.transpose() * x + l2 * m.weights;
    Eigen::VectorXd grad_b = residual.colwise().sum().transpose();
    m.weights -= lr * grad_w;
    m.bias -= lr * grad_b;
  }
  return m;
}

int predict(const LogisticModel& m, const Eigen::Ref<const Eigen::RowVectorXd>& x) {
  Eigen::VectorXd logits = m.weights * x.transpose() + m.bias;
  Eigen::Index best = 0;
  logits.maxCoeff(&best);
  return static_cast<int>(best);
}

}  // namespace

ClassificationScores node_classification(const RowMatrix& features, std::span<const int> labels,
                                         const NodeClassificationConfig& config) {
  if (static_cast<std::size_t>(features.rows()) != labels.size()) {
    throw ValidationError("node classification: one label per feature row required");
  }
  if (!features.allFinite()) throw ValidationError("node classification: features must be finite");
  if (config.repeats < 1) throw ValidationError("repeats must be >= 1");
  if (!(config.train_fraction > 0.0 && config.train_fraction < 1.0)) {
    throw ValidationError("train fraction must be in (0, 1)");
  }

  std::vector<std::size_t> rows;
  std::map<int, int> class_index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == kUnlabeled) continue;
    rows.push_back(i);
    class_index.emplace(labels[i], 0);
  }
  if (class_index.size() < 2) throw ValidationError("node classification needs at least two classes");
  int next = 0;
  for (auto& [label, idx] : class_index) idx = next++;
  const int classes = next;

  RowMatrix x(static_cast<Eigen::Index>(rows.size()), features.cols());
  std::vector<int> y(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    x.row(static_cast<Eigen::Index>(r)) = features.row(static_cast<Eigen::Index>(rows[r]));
    if (config.normalize) {
      double norm = x.row(static_cast<Eigen::Index>(r)).norm();
      if (norm > 0.0) x.row(static_cast<Eigen::Index>(r)) /= norm;
    }
    y[r] = class_index.at(labels[rows[r]]);
  }

  const std::size_t n = rows.size();
  const auto n_train = static_cast<std::size_t>(std::llround(config.train_fraction * static_cast<double>(n)));
  if (n_train < 1 || n_train >= n) throw ValidationError("train fraction leaves an empty train or test split");

  ClassificationScores total;
  for (int rep = 0; rep < config.repeats; ++rep) {
    std::vector<std::size_t> perm;
    bool ok = false;
    for (int attempt = 0; attempt < 100 && !ok; ++attempt) {
      perm.resize(n);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      Rng rng = make_stream(config.seed, "nodeclf", static_cast<std::uint64_t>(rep),
                            static_cast<std::uint64_t>(attempt));
      shuffle(perm, rng);
      std::set<int> seen;
      for (std::size_t k = 0; k < n_train; ++k) seen.insert(y[perm[k]]);
      ok = static_cast<int>(seen.size()) == classes;
    }
    if (!ok) throw ValidationError("could not draw a training split containing every class");

    RowMatrix x_train(static_cast<Eigen::Index>(n_train), x.cols());
    std::vector<int> y_train(n_train);
    for (std::size_t k = 0; k < n_train; ++k) {
      x_train.row(static_cast<Eigen::Index>(k)) = x.row(static_cast<Eigen::Index>(perm[k]));
      y_train[k] = y[perm[k]];
    }
    LogisticModel model = fit_logistic(x_train, y_train, classes, config.l2, config.steps);
    std::vector<int> truth, predicted;
    for (std::size_t k = n_train; k < n; ++k) {
      truth.push_back(y[perm[k]]);
      predicted.push_back(predict(model, x.row(static_cast<Eigen::Index>(perm[k]))));
    }
    ClassificationScores s = f1_scores(truth, predicted);
    total.f1_micro += s.f1_micro;
    total.f1_macro += s.f1_macro;
  }
  total.f1_micro /= config.repeats;
  total.f1_macro /= config.repeats;
  return total;
}

}  // namespace graphemb
