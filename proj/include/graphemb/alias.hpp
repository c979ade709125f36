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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "graphemb/random.hpp"

namespace graphemb {

// Walker/Vose alias table: O(n) build, O(1) draws from an unnormalized
// non-negative mass vector.
class AliasTable {
 public:
  AliasTable() = default;
  explicit AliasTable(std::span<const double> mass);

  bool empty() const noexcept { return prob_.empty(); }
  std::size_t size() const noexcept { return prob_.size(); }
  std::size_t sample(Rng& rng) const;

  // The exact distribution the table samples from, reconstructed from the
  // probability/alias columns.
  std::vector<double> distribution() const;

 private:
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

}  // namespace graphemb
