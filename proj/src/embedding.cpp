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

#include "graphemb/embedding.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "graphemb/error.hpp"
#include "graphemb/random.hpp"
#include "text_records.hpp"

namespace graphemb {

PointEmbedding init_embeddings(std::size_t node_count, std::size_t dim, std::uint64_t seed,
                               std::span<const std::uint64_t> keys) {
  if (dim < 1) throw ValidationError("embedding dimension must be >= 1");
  if (!keys.empty() && keys.size() != node_count) throw ValidationError("one key per node required");
  PointEmbedding emb;
  emb.node_count = node_count;
  emb.dim = dim;
  emb.center.resize(node_count * dim);
  emb.context.assign(node_count * dim, 0.0);
  const double half_width = 0.5 / static_cast<double>(dim);
  for (std::size_t v = 0; v < node_count; ++v) {
    Rng rng = make_stream(seed, "init", keys.empty() ? v : keys[v]);
    for (double& x : emb.row(static_cast<NodeId>(v))) x = (2.0 * uniform01(rng) - 1.0) * half_width;
  }
  return emb;
}

namespace {

void write_value(std::ostream& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  out << buf;
}

}  // namespace

EmbeddingTable read_embedding_table(std::istream& in) {
  EmbeddingTable table;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok.size() != 2) throw ParseError(line_no, "expected header 'rows cols'");
      long long rows = detail::parse_int(tok[0], line_no);
      long long cols = detail::parse_int(tok[1], line_no);
      if (rows < 0 || cols < 1) throw ParseError(line_no, "bad embedding header");
      table.rows = static_cast<std::size_t>(rows);
      table.cols = static_cast<std::size_t>(cols);
      table.values.reserve(table.rows * table.cols);
      have_header = true;
      continue;
    }
    if (tok.size() != table.cols + 1) {
      throw ParseError(line_no, "expected id and " + std::to_string(table.cols) + " values");
    }
    if (table.ids.find(tok[0])) throw ParseError(line_no, "duplicate id '" + tok[0] + "'");
    table.ids.intern(tok[0]);
    for (std::size_t c = 0; c < table.cols; ++c) table.values.push_back(detail::parse_double(tok[c + 1], line_no));
  }
  if (!have_header) throw ParseError(line_no, "missing embedding header");
  if (table.ids.size() != table.rows) {
    throw ValidationError("embedding header promises " + std::to_string(table.rows) + " rows, found " +
                          std::to_string(table.ids.size()));
  }
  return table;
}

void write_embedding_table(const EmbeddingTable& table, std::ostream& out) {
  out << table.rows << ' ' << table.cols << '\n';
  for (std::size_t r = 0; r < table.rows; ++r) {
    out << table.ids.name(static_cast<NodeId>(r));
    for (double v : table.row(r)) {
      out << ' ';
      write_value(out, v);
    }
    out << '\n';
  }
}

void write_word2vec(const PointEmbedding& embedding, const IdMap& ids, std::ostream& out) {
  if (ids.size() != embedding.node_count) throw ValidationError("id map does not match embedding rows");
  EmbeddingTable table{ids, embedding.node_count, embedding.dim, embedding.center};
  write_embedding_table(table, out);
}

}  // namespace graphemb
