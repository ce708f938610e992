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

#include "qabel/run_record.hpp"

namespace qabel {

Json to_json(const RunRecord& rec) {
  Json j;
  j["algorithm"] = rec.algorithm;
  j["seed"] = rec.seed;
  j["parameters"] = rec.parameters;
  j["samples"] = rec.samples;
  j["post_processing"] = rec.post_processing;
  j["result"] = rec.result;
  j["oracle_queries"] = rec.oracle_queries;
  j["wall_time_ms"] = rec.wall_time_ms;
  if (!rec.error.empty()) j["error"] = rec.error;
  return j;
}

Json strip_timing(Json j) {
  if (j.is_object()) {
    j.erase("wall_time_ms");
    for (auto& [key, value] : j.items()) value = strip_timing(std::move(value));
  } else if (j.is_array()) {
    for (auto& value : j) value = strip_timing(std::move(value));
  }
  return j;
}

Json to_json(const Convergent& c) { return Json{{"k", c.k}, {"r", c.r}}; }

Json to_json(const StageRecord& s) {
  return Json{{"j", s.j},
              {"t", s.t},
              {"y_count", s.y_count},
              {"p0_hat", s.p0_hat},
              {"y_count_quadrature", s.y_count_quadrature},
              {"p0_hat_quadrature", s.p0_hat_quadrature},
              {"turns", s.turns},
              {"bits", s.bits}};
}

Json to_json(const PhaseEstimate& e) {
  Json j;
  std::string bits;
  for (const int b : e.bits) bits.push_back(static_cast<char>('0' + b));
  j["bits"] = bits;
  j["epsilon"] = e.epsilon;
  j["stages"] = Json::array();
  for (const auto& s : e.stages) j["stages"].push_back(to_json(s));
  if (e.failure) j["failure"] = *e.failure;
  return j;
}

Json to_json(const ShorSampleRecord& s) {
  return Json{{"c", s.c}, {"fraction", to_json(s.fraction)}};
}

Json to_json(const FactorAttempt& a) {
  Json j{{"y", a.y}, {"gcd", a.gcd_with_n}};
  j["r"] = a.r ? Json(*a.r) : Json(nullptr);
  j["divisor"] = a.divisor ? Json(*a.divisor) : Json(nullptr);
  j["note"] = a.note;
  return j;
}

Json bits_json(BitVec v, int width) { return Json(format_bits(v, width)); }

}  // namespace qabel
