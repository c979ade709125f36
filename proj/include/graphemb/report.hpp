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
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace graphemb {

struct MetricsReport {
  std::string task;
  std::map<std::string, double> metrics;
  nlohmann::json config = nlohmann::json::object();
  std::vector<std::uint64_t> seeds;

  // Throws ValidationError on non-finite values or out-of-range metrics.
  void validate() const;
  nlohmann::json to_json() const;
};

// 16 hex digits of a hash over the canonical serialization of config.
std::string config_digest(const nlohmann::json& config);

void write_report(const MetricsReport& report, std::ostream& out);

}  // namespace graphemb
