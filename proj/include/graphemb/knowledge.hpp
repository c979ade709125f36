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

#include <iosfwd>
#include <vector>

#include "graphemb/graph.hpp"

namespace graphemb {

struct Triple {
  NodeId head{0};
  NodeId relation{0};
  NodeId tail{0};

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct KnowledgeTriples {
  IdMap entities;
  IdMap relations;
  std::vector<Triple> triples;

  void validate() const;
};

// "head relation tail" rows.
KnowledgeTriples load_triples(std::istream& in);

}  // namespace graphemb
