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

#include "graphemb/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "graphemb/error.hpp"
#include "graphemb/random.hpp"

namespace graphemb {

namespace {

bool in_range(const std::string& key, double value) {
  if (key == "auc" || key == "ap" || key == "f1_micro" || key == "f1_macro" || key == "nmi" || key == "accuracy") {
    return value >= 0.0 && value <= 1.0;
  }
  if (key == "silhouette") return value >= -1.0 && value <= 1.0;
  return true;
}

}  // namespace

void MetricsReport::validate() const {
  if (task.empty()) throw ValidationError("report task name is empty");
  for (const auto& [key, value] : metrics) {
    if (!std::isfinite(value)) throw ValidationError("metric " + key + " is not finite");
    if (!in_range(key, value)) throw ValidationError("metric " + key + " is out of range");
  }
}

std::string config_digest(const nlohmann::json& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_name(config.dump())));
  return buf;
}

nlohmann::json MetricsReport::to_json() const {
  nlohmann::json j;
  j["task"] = task;
  j["metrics"] = metrics;
  j["config"] = config;
  j["seeds"] = seeds;
  j["config_digest"] = config_digest(config);
  return j;
}

void write_report(const MetricsReport& report, std::ostream& out) {
  report.validate();
  out << report.to_json().dump(2) << '\n';
}

}  // namespace graphemb
