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

#include <atomic>
#include <cmath>
#include <cstddef>

namespace graphemb::detail {

inline double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

// log(sigmoid(x)) without overflow.
inline double log_sigmoid(double x) {
  if (x >= 0) return -std::log1p(std::exp(-x));
  return x - std::log1p(std::exp(x));
}

// Shared-table access for the SGD kernels. Relaxed atomics make concurrent
// unsynchronized updates well-defined; lost updates are accepted.
inline double load(const double& x) {
  return std::atomic_ref<double>(const_cast<double&>(x)).load(std::memory_order_relaxed);
}
inline void store(double& x, double v) { std::atomic_ref<double>(x).store(v, std::memory_order_relaxed); }

enum class Sample { kPositive, kNegative, kNegativeAsPrinted };

// One SGD step of `input` against `target`: a positive row, a noise row, or
// a noise row under the printed (sign-flipped) negative term. The target is
// updated in place; the input's step is accumulated into `step`.
inline void sgns_update(double* input, double* target, double* step, std::size_t dim, Sample kind,
                        double lr) {
  double dot = 0.0;
  for (std::size_t d = 0; d < dim; ++d) dot += load(input[d]) * load(target[d]);
  double s = sigmoid(dot);
  double g = (kind == Sample::kPositive ? 1.0 - s : kind == Sample::kNegative ? -s : s - 1.0) * lr;
  for (std::size_t d = 0; d < dim; ++d) step[d] += g * load(target[d]);
  for (std::size_t d = 0; d < dim; ++d) store(target[d], load(target[d]) + g * load(input[d]));
}

}  // namespace graphemb::detail
