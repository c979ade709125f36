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

#include "graphemb/knowledge.hpp"

#include "graphemb/error.hpp"
#include "text_records.hpp"

namespace graphemb {

void KnowledgeTriples::validate() const {
  for (const Triple& t : triples) {
    if (t.head >= entities.size() || t.tail >= entities.size()) throw ValidationError("triple entity out of range");
    if (t.relation >= relations.size()) throw ValidationError("triple relation out of range");
  }
}

KnowledgeTriples load_triples(std::istream& in) {
  KnowledgeTriples kg;
  detail::for_each_record(in, [&](std::size_t line_no, const std::vector<std::string>& tok) {
    if (tok.size() != 3) throw ParseError(line_no, "expected 'head relation tail'");
    Triple t;
    t.head = kg.entities.intern(tok[0]);
    t.relation = kg.relations.intern(tok[1]);
    t.tail = kg.entities.intern(tok[2]);
    kg.triples.push_back(t);
  });
  return kg;
}

}  // namespace graphemb
