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

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "qabel/group.hpp"

namespace qabel {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_unsigned(const std::string& field, int line_no) {
  const auto text = trim(field);
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit)) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                     text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw ParseError("line " + std::to_string(line_no) + ": value out of range");
  }
}

}  // namespace

TruthTable::TruthTable(GroupSpec group, std::vector<std::uint64_t> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.order()) {
    throw std::invalid_argument("truth table has " + std::to_string(values_.size()) +
                                " values, group order is " + std::to_string(group_.order()));
  }
}

std::uint64_t TruthTable::value_bound() const {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end()) + 1;
}

TruthTable parse_truth_table(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::optional<GroupSpec> group;
  std::vector<std::uint64_t> values;
  std::vector<char> seen;
  std::uint64_t filled = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (!group) {
      const std::string tag = "group:";
      if (line.rfind(tag, 0) != 0) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'group: n_1,...,n_m'");
      }
      try {
        group = parse_group(trim(line.substr(tag.size())));
      } catch (const std::invalid_argument& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
      values.assign(group->order(), 0);
      seen.assign(group->order(), 0);
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": missing '->'");
    }
    GroupElement x;
    std::stringstream lhs(line.substr(0, arrow));
    std::string field;
    while (std::getline(lhs, field, ',')) {
      x.residues.push_back(static_cast<std::int64_t>(parse_unsigned(field, line_no)));
    }
    if (!group->contains(x)) {
      throw ParseError("line " + std::to_string(line_no) + ": element is not in group " +
                       format_group(*group));
    }
    const auto idx = group->index_of(x);
    if (seen[idx]) throw ParseError("line " + std::to_string(line_no) + ": duplicate element");
    seen[idx] = 1;
    values[idx] = parse_unsigned(line.substr(arrow + 2), line_no);
    ++filled;
  }
  if (!group) throw ParseError("truth table is missing its 'group:' header");
  if (filled != group->order()) {
    throw ParseError("truth table is partial: " + std::to_string(filled) + " of " +
                     std::to_string(group->order()) + " elements given");
  }
  return TruthTable(std::move(*group), std::move(values));
}

TruthTable load_truth_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open truth table file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_truth_table(buffer.str());
}

std::string format_truth_table(const TruthTable& f) {
  std::ostringstream out;
  out << "group: " << format_group(f.group()) << '\n';
  for (std::uint64_t idx = 0; idx < f.group().order(); ++idx) {
    const auto x = f.group().element_at(idx);
    for (std::size_t j = 0; j < x.residues.size(); ++j) {
      if (j) out << ',';
      out << x.residues[j];
    }
    out << " -> " << f.at(idx) << '\n';
  }
  return out.str();
}

}  // namespace qabel
