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

#include <complex>
#include <cstddef>
#include <vector>

namespace qlab {

using Complex = std::complex<double>;

/// Square complex matrix, row-major.  Sized for desk work (gate payloads,
/// dense oracles); not a linear-algebra library.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

  static CMatrix identity(std::size_t dim);
  static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const { return dim_; }
  Complex& at(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const Complex& at(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

  CMatrix operator*(const CMatrix& other) const;
  CMatrix operator+(const CMatrix& other) const;
  CMatrix operator-(const CMatrix& other) const;
  CMatrix operator*(Complex scalar) const;
  CMatrix adjoint() const;

  /// max_{r,c} |a - b| entrywise.
  double max_abs_diff(const CMatrix& other) const;
  bool is_unitary(double tol) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> a_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);

// Single-qubit constants.
CMatrix mat_i2();
CMatrix mat_x();
CMatrix mat_y();
CMatrix mat_z();
CMatrix mat_h();
CMatrix mat_s();

}  // namespace qlab
