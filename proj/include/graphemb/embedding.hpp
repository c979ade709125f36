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
#include <iosfwd>
#include <span>
#include <vector>

#include "graphemb/graph.hpp"

namespace graphemb {

// Center table Z and context table Z', both node_count x dim, row-major.
struct PointEmbedding {
  std::size_t node_count{0};
  std::size_t dim{0};
  std::vector<double> center;
  std::vector<double> context;

  std::span<double> row(NodeId v) { return {center.data() + v * dim, dim}; }
  std::span<const double> row(NodeId v) const { return {center.data() + v * dim, dim}; }
  std::span<double> context_row(NodeId v) { return {context.data() + v * dim, dim}; }
  std::span<const double> context_row(NodeId v) const { return {context.data() + v * dim, dim}; }
};

// Z uniform in [-0.5/dim, 0.5/dim], Z' zero. Row v is drawn from a stream
// keyed by keys[v] (default: v), so relabeled graphs with matching keys get
// matching rows.
PointEmbedding init_embeddings(std::size_t node_count, std::size_t dim, std::uint64_t seed,
                               std::span<const std::uint64_t> keys = {});

// Dense table read back from a text embedding file: "rows cols" header,
// then "external_id v1 ... v_cols" per row.
struct EmbeddingTable {
  IdMap ids;
  std::size_t rows{0};
  std::size_t cols{0};
  std::vector<double> values;

  std::span<const double> row(std::size_t r) const { return {values.data() + r * cols, cols}; }
};

EmbeddingTable read_embedding_table(std::istream& in);
void write_embedding_table(const EmbeddingTable& table, std::ostream& out);

// word2vec text format of the center table.
void write_word2vec(const PointEmbedding& embedding, const IdMap& ids, std::ostream& out);

}  // namespace graphemb
