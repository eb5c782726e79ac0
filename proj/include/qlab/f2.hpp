// Copyright 2026 The qlab authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace qlab {

/// Bit vector over F2, packed into a single 64-bit word (length <= 64).
///
/// Positions are 1-based in the public interface.  Position 1 is the most
/// significant bit of to_index(), matching the wire-index convention of the
/// simulator: the bit string (1,0,0) is index 4.
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(int length);

  /// Characters '0'/'1'; text[0] is position 1.
  static F2Vector from_string(const std::string& text);
  /// Positions (1-based) whose bit is set.
  static F2Vector from_support(int length, std::initializer_list<int> support);
  static F2Vector from_support(int length, const std::vector<int>& support);
  /// Unpacks an integer, position 1 = most significant of `length` bits.
  static F2Vector from_index(int length, std::uint64_t index);

  int length() const { return length_; }
  bool get(int position) const;
  void set(int position, bool value);

  int weight() const;
  std::uint64_t to_index() const;
  std::string str() const;
  std::vector<int> support() const;

  F2Vector operator+(const F2Vector& other) const;  // bitwise xor
  bool operator==(const F2Vector& other) const = default;
  bool is_zero() const { return bits_ == 0; }

  std::uint64_t word() const { return bits_; }

 private:
  int length_ = 0;
  std::uint64_t bits_ = 0;  // position p lives at bit (length - p)
};

int dot(const F2Vector& a, const F2Vector& b);

/// Dense matrix over F2, stored as bit-packed rows.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(int rows, int cols);
  static F2Matrix from_rows(const std::vector<F2Vector>& rows);
  /// Rows separated by whitespace, e.g. "1010101 0110011 0001111".
  static F2Matrix from_string(const std::string& text);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const F2Vector& row(int r) const;  // 1-based
  void set_row(int r, const F2Vector& v);
  bool get(int r, int c) const { return row(r).get(c); }

  bool operator==(const F2Matrix& other) const = default;
  std::string str() const;

 private:
  int cols_ = 0;
  std::vector<F2Vector> rows_;
};

/// Parity-check matrix of the [7,4] Hamming code; column i is the binary
/// form of i with row 1 the least significant bit.
F2Matrix hamming_parity_check();

/// Parity-check matrix {110, 011} of the 3-bit repetition code.
F2Matrix repetition_parity_check();

/// All 2^rank row combinations, deduplicated and sorted by to_index().
/// Refuses rank > 20.
std::vector<F2Vector> row_span(const F2Matrix& m);

/// Syndrome p . e: component r is dot(row r, e).
F2Vector syndrome(const F2Matrix& p, const F2Vector& e);

/// Reduced row-echelon form; zero rows dropped.
F2Matrix rref(const F2Matrix& m);

int rank(const F2Matrix& m);

/// 1-based pivot columns of rref(m), ascending.
std::vector<int> pivot_columns(const F2Matrix& m);

/// Basis of the kernel {v : p.v = 0}, in reduced form.
std::vector<F2Vector> kernel_basis(const F2Matrix& p);

/// Looks up the unique error of weight <= 1 with the given syndrome, if any.
/// Table-driven: the zero error and each single-bit error are enumerated
/// once; no structure beyond the columns of p is assumed.
std::optional<F2Vector> decode_single_error(const F2Matrix& p, const F2Vector& s);

}  // namespace qlab
