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

#include "graphemb/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "graphemb/error.hpp"
#include "graphemb/random.hpp"

namespace graphemb {

namespace {

double squared_distance(const RowMatrix& a, Eigen::Index i, const RowMatrix& b, Eigen::Index j) {
  return (a.row(i) - b.row(j)).squaredNorm();
}

KMeansResult lloyd(const RowMatrix& points, int k, Rng& rng, int max_iter) {
  const Eigen::Index n = points.rows();
  KMeansResult r;
  r.centroids.resize(k, points.cols());

  // k-means++ seeding
  std::vector<double> d2(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
  Eigen::Index first = static_cast<Eigen::Index>(uniform_index(rng, static_cast<std::uint64_t>(n)));
  r.centroids.row(0) = points.row(first);
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      d2[static_cast<std::size_t>(i)] = std::min(d2[static_cast<std::size_t>(i)], squared_distance(points, i, r.centroids, c - 1));
      total += d2[static_cast<std::size_t>(i)];
    }
    Eigen::Index pick = n - 1;
    if (total > 0.0) {
      double target = uniform01(rng) * total;
      for (Eigen::Index i = 0; i < n; ++i) {
        target -= d2[static_cast<std::size_t>(i)];
        if (target < 0.0) {
          pick = i;
          break;
        }
      }
    } else {
      pick = static_cast<Eigen::Index>(uniform_index(rng, static_cast<std::uint64_t>(n)));
    }
    r.centroids.row(c) = points.row(pick);
  }

  r.assignments.assign(static_cast<std::size_t>(n), -1);
  for (r.iterations = 0; r.iterations < max_iter; ++r.iterations) {
    bool changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      int best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k; ++c) {
        double d = squared_distance(points, i, r.centroids, c);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (r.assignments[static_cast<std::size_t>(i)] != best) {
        r.assignments[static_cast<std::size_t>(i)] = best;
        changed = true;
      }
    }
    if (!changed && r.iterations > 0) break;

    RowMatrix sums = RowMatrix::Zero(k, points.cols());
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      int c = r.assignments[static_cast<std::size_t>(i)];
      sums.row(c) += points.row(i);
      ++counts[static_cast<std::size_t>(c)];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[static_cast<std::size_t>(c)] > 0) {
        r.centroids.row(c) = sums.row(c) / counts[static_cast<std::size_t>(c)];
        continue;
      }
      // Empty cluster: move it to the point farthest from its centroid.
      Eigen::Index far = 0;
      double far_d = -1.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        double d = squared_distance(points, i, r.centroids, r.assignments[static_cast<std::size_t>(i)]);
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      r.centroids.row(c) = points.row(far);
      r.assignments[static_cast<std::size_t>(far)] = c;
    }
  }
  r.inertia = inertia(points, r.assignments);
  return r;
}

}  // namespace

double inertia(const RowMatrix& points, std::span<const int> assignments) {
  if (static_cast<std::size_t>(points.rows()) != assignments.size()) {
    throw ValidationError("inertia: one assignment per point required");
  }
  std::map<int, std::pair<Eigen::RowVectorXd, int>> sums;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    auto [it, fresh] = sums.try_emplace(assignments[static_cast<std::size_t>(i)],
                                        Eigen::RowVectorXd::Zero(points.cols()), 0);
    it->second.first += points.row(i);
    ++it->second.second;
  }
  double total = 0.0;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    const auto& [sum, count] = sums.at(assignments[static_cast<std::size_t>(i)]);
    total += (points.row(i) - sum / count).squaredNorm();
  }
  return total;
}

KMeansResult kmeans(const RowMatrix& points, int k, std::uint64_t seed, int max_iter, int restarts) {
  if (k < 1) throw ValidationError("k must be >= 1");
  if (k > points.rows()) throw ValidationError("k exceeds the number of points");
  if (restarts < 1 || max_iter < 1) throw ValidationError("restarts and max_iter must be >= 1");
  KMeansResult best;
  best.inertia = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    Rng rng = make_stream(seed, "kmeans", static_cast<std::uint64_t>(r));
    KMeansResult run = lloyd(points, k, rng, max_iter);
    if (run.inertia < best.inertia) best = std::move(run);
  }
  return best;
}

double silhouette(const RowMatrix& points, std::span<const int> assignments) {
  const auto n = static_cast<std::size_t>(points.rows());
  if (assignments.size() != n) throw ValidationError("silhouette: one assignment per point required");
  std::map<int, int> sizes;
  for (int a : assignments) ++sizes[a];
  if (sizes.size() < 2) throw ValidationError("silhouette needs at least two clusters");

  double total = 0.0;
  std::map<int, double> dist_sum;
  for (std::size_t i = 0; i < n; ++i) {
    if (sizes[assignments[i]] == 1) continue;
    for (auto& [c, s] : dist_sum) s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      dist_sum[assignments[j]] += (points.row(static_cast<Eigen::Index>(i)) - points.row(static_cast<Eigen::Index>(j))).norm();
    }
    double a = dist_sum[assignments[i]] / (sizes[assignments[i]] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (const auto& [c, s] : dist_sum) {
      if (c != assignments[i]) b = std::min(b, s / sizes[c]);
    }
    double denom = std::max(a, b);
    total += denom > 0.0 ? (b - a) / denom : 0.0;
  }
  return total / static_cast<double>(n);
}

std::vector<int> max_weight_matching(const std::vector<std::vector<double>>& weights) {
  // Hungarian algorithm (potentials form) minimizing -weight on a square
  // matrix padded with zeros.
  const std::size_t rows = weights.size();
  std::size_t cols = 0;
  for (const auto& r : weights) cols = std::max(cols, r.size());
  const std::size_t n = std::max(rows, cols);
  auto cost = [&](std::size_t i, std::size_t j) {
    if (i < rows && j < weights[i].size()) return -weights[i][j];
    return 0.0;
  };
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      std::size_t i0 = p[j0], j1 = 0;
      double delta = inf;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> match(rows, -1);
  for (std::size_t j = 1; j <= n; ++j) {
    if (p[j] != 0 && p[j] - 1 < rows && j - 1 < cols) match[p[j] - 1] = static_cast<int>(j - 1);
  }
  return match;
}

AgreementScores nmi_and_accuracy(std::span<const int> predicted, std::span<const int> truth) {
  if (predicted.size() != truth.size()) throw ValidationError("nmi: label vectors differ in length");
  if (predicted.empty()) throw ValidationError("nmi: no samples");
  std::map<int, std::size_t> pi, ti;
  for (int p : predicted) pi.emplace(p, pi.size());
  for (int t : truth) ti.emplace(t, ti.size());
  std::vector<std::vector<double>> table(pi.size(), std::vector<double>(ti.size(), 0.0));
  for (std::size_t k = 0; k < predicted.size(); ++k) table[pi[predicted[k]]][ti[truth[k]]] += 1.0;

  const double total = static_cast<double>(predicted.size());
  std::vector<double> row(pi.size(), 0.0), col(ti.size(), 0.0);
  for (std::size_t a = 0; a < pi.size(); ++a) {
    for (std::size_t b = 0; b < ti.size(); ++b) {
      row[a] += table[a][b];
      col[b] += table[a][b];
    }
  }
  auto entropy = [total](const std::vector<double>& counts) {
    double h = 0.0;
    for (double c : counts) {
      if (c > 0.0) h -= c / total * std::log(c / total);
    }
    return h;
  };
  double mi = 0.0;
  for (std::size_t a = 0; a < pi.size(); ++a) {
    for (std::size_t b = 0; b < ti.size(); ++b) {
      double c = table[a][b];
      if (c > 0.0) mi += c / total * std::log(total * c / (row[a] * col[b]));
    }
  }
  const double hp = entropy(row), ht = entropy(col);
  AgreementScores out;
  if (hp == 0.0 && ht == 0.0) {
    out.nmi = 1.0;
  } else {
    out.nmi = std::max(0.0, mi / (0.5 * (hp + ht)));
  }

  std::vector<int> match = max_weight_matching(table);
  double matched = 0.0;
  for (std::size_t a = 0; a < match.size(); ++a) {
    if (match[a] >= 0) matched += table[a][static_cast<std::size_t>(match[a])];
  }
  out.accuracy = matched / total;
  return out;
}

}  // namespace graphemb
