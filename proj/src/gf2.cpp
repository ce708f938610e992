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

#include "qabel/gf2.hpp"

#include <algorithm>
#include <stdexcept>

#include "qabel/common.hpp"

namespace qabel {

BitVec parse_bits(const std::string& text) {
  if (text.empty() || text.size() > 64) throw ParseError("bit string must have 1 to 64 characters");
  BitVec v = 0;
  for (const char c : text) {
    if (c != '0' && c != '1') throw ParseError("bad bit string '" + text + "'");
    v = (v << 1) | static_cast<BitVec>(c - '0');
  }
  return v;
}

std::string format_bits(BitVec v, int width) {
  std::string out(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if ((v >> (width - 1 - i)) & 1) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

GF2Matrix::GF2Matrix(int width) : width_(width) {
  if (width < 1 || width > 64) throw std::invalid_argument("GF(2) width must be in [1, 64]");
}

void GF2Matrix::add_row(BitVec row) {
  if (width_ < 64 && (row >> width_) != 0) throw std::invalid_argument("row wider than the matrix");
  rows_.push_back(row);
}

int GF2Matrix::rank() const {
  GF2Echelon e(width_);
  for (const auto row : rows_) e.insert(row);
  return e.rank();
}

bool GF2Echelon::insert(BitVec row) {
  if (width_ < 64 && (row >> width_) != 0) throw std::invalid_argument("row wider than the echelon");
  // pivots_ is kept sorted by leading bit, descending, with distinct leaders.
  for (const auto p : pivots_) {
    const auto lead = BitVec{1} << (63 - __builtin_clzll(p));
    if (row & lead) row ^= p;
  }
  if (row == 0) return false;
  pivots_.push_back(row);
  std::sort(pivots_.begin(), pivots_.end(), std::greater<>());
  return true;
}

std::vector<BitVec> gf2_nullspace(const GF2Matrix& m) {
  const int n = m.width();
  // Reduced row echelon form with column 0 = most significant bit.
  std::vector<BitVec> rows = m.rows();
  std::vector<int> pivot_cols;
  std::size_t next = 0;
  for (int col = 0; col < n && next < rows.size(); ++col) {
    const BitVec mask = BitVec{1} << (n - 1 - col);
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(next), rows.end(),
                           [mask](BitVec r) { return r & mask; });
    if (it == rows.end()) continue;
    std::swap(rows[next], *it);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != next && (rows[i] & mask)) rows[i] ^= rows[next];
    }
    pivot_cols.push_back(col);
    ++next;
  }
  std::vector<BitVec> basis;
  for (int free = 0; free < n; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    BitVec v = BitVec{1} << (n - 1 - free);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      if (rows[i] & (BitVec{1} << (n - 1 - free))) v |= BitVec{1} << (n - 1 - pivot_cols[i]);
    }
    basis.push_back(v);
  }
  return basis;
}

}  // namespace qabel
