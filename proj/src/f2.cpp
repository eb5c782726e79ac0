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

#include "qlab/f2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "qlab/errors.hpp"

namespace qlab {

F2Vector::F2Vector(int length) : length_(length) {
  if (length < 0 || length > 64) throw DimensionError("F2Vector length must be in [0, 64]");
}

F2Vector F2Vector::from_string(const std::string& text) {
  F2Vector v(static_cast<int>(text.size()));
  for (int i = 0; i < v.length_; ++i) {
    char c = text[static_cast<std::size_t>(i)];
    if (c != '0' && c != '1') throw DimensionError("bit string may contain only 0/1");
    v.set(i + 1, c == '1');
  }
  return v;
}

F2Vector F2Vector::from_support(int length, std::initializer_list<int> support) {
  return from_support(length, std::vector<int>(support));
}

F2Vector F2Vector::from_support(int length, const std::vector<int>& support) {
  F2Vector v(length);
  for (int p : support) v.set(p, true);
  return v;
}

F2Vector F2Vector::from_index(int length, std::uint64_t index) {
  F2Vector v(length);
  if (length < 64 && (index >> length) != 0) throw DimensionError("index out of range for length");
  v.bits_ = index;
  return v;
}

bool F2Vector::get(int position) const {
  if (position < 1 || position > length_) throw DimensionError("F2Vector position out of range");
  return (bits_ >> (length_ - position)) & 1u;
}

void F2Vector::set(int position, bool value) {
  if (position < 1 || position > length_) throw DimensionError("F2Vector position out of range");
  std::uint64_t mask = 1ULL << (length_ - position);
  if (value)
    bits_ |= mask;
  else
    bits_ &= ~mask;
}

int F2Vector::weight() const { return std::popcount(bits_); }

std::uint64_t F2Vector::to_index() const { return bits_; }

std::string F2Vector::str() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 1; i <= length_; ++i)
    if (get(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  return s;
}

std::vector<int> F2Vector::support() const {
  std::vector<int> out;
  for (int i = 1; i <= length_; ++i)
    if (get(i)) out.push_back(i);
  return out;
}

F2Vector F2Vector::operator+(const F2Vector& other) const {
  if (length_ != other.length_) throw DimensionError("F2Vector length mismatch");
  F2Vector v(length_);
  v.bits_ = bits_ ^ other.bits_;
  return v;
}

int dot(const F2Vector& a, const F2Vector& b) {
  if (a.length() != b.length()) throw DimensionError("dot: length mismatch");
  return std::popcount(a.word() & b.word()) & 1;
}

F2Matrix::F2Matrix(int rows, int cols) : cols_(cols), rows_(static_cast<std::size_t>(rows), F2Vector(cols)) {}

F2Matrix F2Matrix::from_rows(const std::vector<F2Vector>& rows) {
  F2Matrix m;
  if (rows.empty()) return m;
  m.cols_ = rows[0].length();
  for (const auto& r : rows) {
    if (r.length() != m.cols_) throw DimensionError("matrix rows must share a length");
    m.rows_.push_back(r);
  }
  return m;
}

F2Matrix F2Matrix::from_string(const std::string& text) {
  std::istringstream in(text);
  std::vector<F2Vector> rows;
  std::string tok;
  while (in >> tok) rows.push_back(F2Vector::from_string(tok));
  return from_rows(rows);
}

const F2Vector& F2Matrix::row(int r) const {
  if (r < 1 || r > rows()) throw DimensionError("F2Matrix row out of range");
  return rows_[static_cast<std::size_t>(r - 1)];
}

void F2Matrix::set_row(int r, const F2Vector& v) {
  if (r < 1 || r > rows()) throw DimensionError("F2Matrix row out of range");
  if (v.length() != cols_) throw DimensionError("row length mismatch");
  rows_[static_cast<std::size_t>(r - 1)] = v;
}

std::string F2Matrix::str() const {
  std::string out;
  for (int r = 1; r <= rows(); ++r) {
    if (r > 1) out += '\n';
    out += row(r).str();
  }
  return out;
}

F2Matrix hamming_parity_check() { return F2Matrix::from_string("1010101 0110011 0001111"); }

F2Matrix repetition_parity_check() { return F2Matrix::from_string("110 011"); }

std::vector<F2Vector> row_span(const F2Matrix& m) {
  F2Matrix red = rref(m);
  int r = red.rows();
  if (r > 20) throw ResourceError("row_span: rank above 20");
  std::vector<F2Vector> out;
  out.reserve(1ULL << r);
  for (std::uint64_t combo = 0; combo < (1ULL << r); ++combo) {
    F2Vector v(m.cols());
    for (int i = 0; i < r; ++i)
      if ((combo >> i) & 1u) v = v + red.row(i + 1);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end(),
            [](const F2Vector& a, const F2Vector& b) { return a.to_index() < b.to_index(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

F2Vector syndrome(const F2Matrix& p, const F2Vector& e) {
  F2Vector s(p.rows());
  for (int r = 1; r <= p.rows(); ++r) s.set(r, dot(p.row(r), e) != 0);
  return s;
}

F2Matrix rref(const F2Matrix& m) {
  std::vector<F2Vector> rows;
  for (int r = 1; r <= m.rows(); ++r) rows.push_back(m.row(r));
  std::size_t pivot_row = 0;
  for (int col = 1; col <= m.cols() && pivot_row < rows.size(); ++col) {
    std::size_t found = pivot_row;
    while (found < rows.size() && !rows[found].get(col)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != pivot_row && rows[r].get(col)) rows[r] = rows[r] + rows[pivot_row];
    ++pivot_row;
  }
  rows.resize(pivot_row);
  if (rows.empty()) return F2Matrix(0, m.cols());
  return F2Matrix::from_rows(rows);
}

int rank(const F2Matrix& m) { return rref(m).rows(); }

std::vector<int> pivot_columns(const F2Matrix& m) {
  F2Matrix red = rref(m);
  std::vector<int> pivots;
  for (int r = 1; r <= red.rows(); ++r) {
    for (int c = 1; c <= red.cols(); ++c) {
      if (red.get(r, c)) {
        pivots.push_back(c);
        break;
      }
    }
  }
  return pivots;
}

std::vector<F2Vector> kernel_basis(const F2Matrix& p) {
  F2Matrix red = rref(p);
  std::vector<int> pivots = pivot_columns(p);
  std::vector<bool> is_pivot(static_cast<std::size_t>(p.cols()) + 1, false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<F2Vector> basis;
  for (int free_col = 1; free_col <= p.cols(); ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    F2Vector v(p.cols());
    v.set(free_col, true);
    for (int r = 1; r <= red.rows(); ++r)
      if (red.get(r, free_col)) v.set(pivots[static_cast<std::size_t>(r - 1)], true);
    basis.push_back(v);
  }
  return basis;
}

std::optional<F2Vector> decode_single_error(const F2Matrix& p, const F2Vector& s) {
  if (s.length() != p.rows()) throw DimensionError("decode: syndrome length != row count");
  // Zero first, then single-bit errors in position order; first match wins.
  F2Vector zero(p.cols());
  if (syndrome(p, zero) == s) return zero;
  for (int i = 1; i <= p.cols(); ++i) {
    F2Vector e(p.cols());
    e.set(i, true);
    if (syndrome(p, e) == s) return e;
  }
  return std::nullopt;
}

}  // namespace qlab
