// Copyright 2026 The qabel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "qabel/algorithms.hpp"
#include "qabel/kitaev.hpp"

namespace qabel {

using Json = nlohmann::ordered_json;

/// One seeded execution of an algorithm. Field names are part of the CLI
/// contract and must not change.
struct RunRecord {
  std::string algorithm;
  std::uint64_t seed = 0;
  Json parameters = Json::object();
  Json samples = Json::array();
  Json post_processing = Json::object();
  Json result;
  int oracle_queries = 0;
  std::int64_t wall_time_ms = 0;
  /// Present only when the run failed.
  std::string error;
};

Json to_json(const RunRecord& rec);
/// Copy of `j` with every wall_time_ms field removed.
Json strip_timing(Json j);

Json to_json(const Convergent& c);
Json to_json(const StageRecord& s);
Json to_json(const PhaseEstimate& e);
Json to_json(const ShorSampleRecord& s);
Json to_json(const FactorAttempt& a);
Json bits_json(BitVec v, int width);

}  // namespace qabel
