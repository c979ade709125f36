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

#include "graphemb/alias.hpp"

#include <cmath>

#include "graphemb/error.hpp"

namespace graphemb {

AliasTable::AliasTable(std::span<const double> mass) {
  const std::size_t n = mass.size();
  if (n == 0) throw ValidationError("alias mass is empty");
  double total = 0.0;
  for (double m : mass) {
    if (!(m >= 0.0) || !std::isfinite(m)) throw ValidationError("alias mass must be finite and >= 0");
    total += m;
  }
  if (!(total > 0.0)) throw ValidationError("alias mass must not be all zero");

  prob_.resize(n);
  alias_.resize(n);
  std::vector<double> scaled(n);
  std::vector<std::uint32_t> small, large;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = mass[i] * static_cast<double>(n) / total;
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    std::uint32_t s = small.back();
    small.pop_back();
    std::uint32_t l = large.back();
    prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  for (std::uint32_t i : large) {
    prob_[i] = 1.0;
    alias_[i] = i;
  }
  // Leftovers from rounding are full columns.
  for (std::uint32_t i : small) {
    prob_[i] = 1.0;
    alias_[i] = i;
  }
}

std::size_t AliasTable::sample(Rng& rng) const {
  double u = uniform01(rng) * static_cast<double>(prob_.size());
  auto column = static_cast<std::size_t>(u);
  if (column >= prob_.size()) column = prob_.size() - 1;
  double frac = u - static_cast<double>(column);
  return frac < prob_[column] ? column : alias_[column];
}

std::vector<double> AliasTable::distribution() const {
  const std::size_t n = prob_.size();
  std::vector<double> p(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] += prob_[i];
    p[alias_[i]] += 1.0 - prob_[i];
  }
  for (double& v : p) v /= static_cast<double>(n);
  return p;
}

}  // namespace graphemb
