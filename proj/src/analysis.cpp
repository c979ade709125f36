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

#include "graphemb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "graphemb/error.hpp"

namespace graphemb {

Projection pca_project(const RowMatrix& vectors, std::size_t out_dim) {
  const auto n = vectors.rows();
  const auto dim = static_cast<std::size_t>(vectors.cols());
  if (out_dim == 0) throw ValidationError("out_dim must be positive");
  if (out_dim > dim) throw ValidationError("out_dim exceeds the embedding dimension");
  if (n == 0) throw ValidationError("pca_project: no vectors");

  RowMatrix centered = vectors.rowwise() - vectors.colwise().mean();
  const double denom = n > 1 ? static_cast<double>(n - 1) : 1.0;
  Projection out;
  if (out_dim == dim) {
    out.coordinates = centered;
    for (std::size_t c = 0; c < dim; ++c) {
      out.variances.push_back(centered.col(static_cast<Eigen::Index>(c)).squaredNorm() / denom);
    }
    return out;
  }

  Eigen::MatrixXd cov = centered.transpose() * centered / denom;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) throw Error("pca_project: eigendecomposition failed");
  Eigen::MatrixXd axes(dim, out_dim);
  for (std::size_t c = 0; c < out_dim; ++c) {
    // Eigenvalues come back ascending.
    const auto src = static_cast<Eigen::Index>(dim - 1 - c);
    Eigen::VectorXd axis = solver.eigenvectors().col(src);
    Eigen::Index arg = 0;
    axis.cwiseAbs().maxCoeff(&arg);
    if (axis(arg) < 0.0) axis = -axis;
    axes.col(static_cast<Eigen::Index>(c)) = axis;
    out.variances.push_back(std::max(0.0, solver.eigenvalues()(src)));
  }
  out.coordinates = centered * axes;
  return out;
}

UncertaintyCurves uncertainty_per_dimension(const EmbeddingHistory& history) {
  if (history.mean_sigma.empty()) throw ValidationError("uncertainty_per_dimension: empty history");
  UncertaintyCurves out;
  out.curves.assign(history.dims, std::vector<double>(history.mean_sigma.size()));
  for (std::size_t e = 0; e < history.mean_sigma.size(); ++e) {
    if (history.mean_sigma[e].size() != history.dims) throw ValidationError("history is not rectangular");
    for (std::size_t d = 0; d < history.dims; ++d) out.curves[d][e] = history.mean_sigma[e][d];
  }
  out.final_sigma = history.mean_sigma.back();
  return out;
}

IntrinsicDimension intrinsic_dimension_estimate(std::span<const double> sigma) {
  if (sigma.size() < 2) throw ValidationError("intrinsic dimension needs at least two dimensions");
  std::vector<double> logs(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!(sigma[i] > 0.0)) throw ValidationError("sigma values must be positive");
    logs[i] = std::log(sigma[i]);
  }
  std::vector<double> sorted_sigma(sigma.begin(), sigma.end());
  std::sort(logs.begin(), logs.end());
  std::sort(sorted_sigma.begin(), sorted_sigma.end());

  IntrinsicDimension out{sigma.size(), 1.0};
  if (logs.front() == logs.back()) return out;

  // In one dimension the optimal 2-means split is contiguous in sorted order.
  const std::size_t n = logs.size();
  std::vector<double> prefix(n + 1, 0.0), prefix_sq(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    prefix[i + 1] = prefix[i] + logs[i];
    prefix_sq[i + 1] = prefix_sq[i] + logs[i] * logs[i];
  }
  auto sse = [&](std::size_t lo, std::size_t hi) {
    const double count = static_cast<double>(hi - lo);
    const double sum = prefix[hi] - prefix[lo];
    return (prefix_sq[hi] - prefix_sq[lo]) - sum * sum / count;
  };
  std::size_t best_split = 1;
  double best_cost = sse(0, 1) + sse(1, n);
  for (std::size_t k = 2; k < n; ++k) {
    double cost = sse(0, k) + sse(k, n);
    if (cost < best_cost) {
      best_cost = cost;
      best_split = k;
    }
  }
  const double low = std::accumulate(sorted_sigma.begin(), sorted_sigma.begin() + static_cast<std::ptrdiff_t>(best_split), 0.0) /
                     static_cast<double>(best_split);
  const double high = std::accumulate(sorted_sigma.begin() + static_cast<std::ptrdiff_t>(best_split), sorted_sigma.end(), 0.0) /
                      static_cast<double>(n - best_split);
  out.effective_dims = best_split;
  out.separation_ratio = high / low;
  return out;
}

double relative_stability(const RowMatrix& f_t, const RowMatrix& f_next, const RowMatrix& s_t,
                          const RowMatrix& s_next) {
  if (f_t.rows() != f_next.rows() || f_t.cols() != f_next.cols()) {
    throw ValidationError("embedding shapes differ across the transition");
  }
  if (s_t.rows() != s_next.rows() || s_t.cols() != s_next.cols()) {
    throw ValidationError("adjacency shapes differ across the transition");
  }
  const double s_norm = s_t.norm();
  const double s_change = (s_next - s_t).norm();
  const double f_norm = f_t.norm();
  if (s_change == 0.0 || s_norm == 0.0 || f_norm == 0.0) throw Error("undefined relative stability");
  return ((f_next - f_t).norm() / f_norm) / (s_change / s_norm);
}

double stability_constant_from_ratios(std::span<const double> ratios) {
  if (ratios.size() < 2) throw ValidationError("stability constant needs at least two transitions");
  auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  return *hi - *lo;
}

RowMatrix restricted_adjacency(const Graph& g, std::span<const NodeId> keep) {
  std::vector<Eigen::Index> position(g.node_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = static_cast<Eigen::Index>(i);
  const auto m = static_cast<Eigen::Index>(keep.size());
  RowMatrix a = RowMatrix::Zero(m, m);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (const Neighbor& nb : g.neighbors(keep[i])) {
      if (position[nb.id] >= 0) a(static_cast<Eigen::Index>(i), position[nb.id]) = nb.weight;
    }
  }
  return a;
}

StabilityResult stability_constant(const SnapshotSequence& snapshots, std::span<const RowMatrix> embeddings) {
  const std::size_t count = snapshots.snapshots.size();
  if (count < 3) throw ValidationError("stability constant needs at least three snapshots");
  if (embeddings.size() != count) throw ValidationError("one embedding per snapshot required");
  const auto n = static_cast<Eigen::Index>(snapshots.ids.size());
  for (const RowMatrix& f : embeddings) {
    if (f.rows() != n) throw ValidationError("embedding rows must cover every node id");
  }

  StabilityResult out;
  for (std::size_t t = 0; t + 1 < count; ++t) {
    std::vector<NodeId> keep;
    for (NodeId v = 0; v < snapshots.present[t].size(); ++v) {
      if (snapshots.present[t][v]) keep.push_back(v);
    }
    RowMatrix f_t(static_cast<Eigen::Index>(keep.size()), embeddings[t].cols());
    RowMatrix f_next(static_cast<Eigen::Index>(keep.size()), embeddings[t + 1].cols());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      f_t.row(static_cast<Eigen::Index>(i)) = embeddings[t].row(keep[i]);
      f_next.row(static_cast<Eigen::Index>(i)) = embeddings[t + 1].row(keep[i]);
    }
    out.ratios.push_back(relative_stability(f_t, f_next, restricted_adjacency(snapshots.snapshots[t], keep),
                                            restricted_adjacency(snapshots.snapshots[t + 1], keep)));
  }
  out.constant = stability_constant_from_ratios(out.ratios);
  return out;
}

}  // namespace graphemb
