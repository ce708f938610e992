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
#include <vector>

namespace qabel {

/// Bit strings of width n <= 64 stored as integers, first character most
/// significant ("110" is 6), which is the B^n element index.
using BitVec = std::uint64_t;

BitVec parse_bits(const std::string& text);
std::string format_bits(BitVec v, int width);

/// x . y = parity of x AND y.
inline int dot(BitVec x, BitVec y) { return __builtin_parityll(x & y); }

/// Rows over GF(2), each `width` bits wide.
class GF2Matrix {
 public:
  explicit GF2Matrix(int width);

  int width() const { return width_; }
  const std::vector<BitVec>& rows() const { return rows_; }
  void add_row(BitVec row);

  int rank() const;

 private:
  int width_;
  std::vector<BitVec> rows_;
};

/// Basis of {x : row . x = 0 for every row}, via Gaussian elimination.
std::vector<BitVec> gf2_nullspace(const GF2Matrix& m);

/// Incremental row echelon form; `insert` reports whether the row was
/// independent of those already held.
class GF2Echelon {
 public:
  explicit GF2Echelon(int width) : width_(width) {}
  bool insert(BitVec row);
  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  int width_;
  std::vector<BitVec> pivots_;
};

}  // namespace qabel
