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

#include "qlab/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "qlab/errors.hpp"

namespace qlab {

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  CMatrix m(rows.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != m.dim_) throw DimensionError("CMatrix: ragged rows");
    std::size_t c = 0;
    for (const auto& v : row) m.at(r, c++) = v;
    ++r;
  }
  return m;
}

CMatrix CMatrix::operator*(const CMatrix& other) const {
  if (dim_ != other.dim_) throw DimensionError("CMatrix product: dimension mismatch");
  CMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t k = 0; k < dim_; ++k) {
      Complex v = at(r, k);
      if (v == 0.0) continue;
      for (std::size_t c = 0; c < dim_; ++c) out.at(r, c) += v * other.at(k, c);
    }
  return out;
}

CMatrix CMatrix::operator+(const CMatrix& other) const {
  if (dim_ != other.dim_) throw DimensionError("CMatrix sum: dimension mismatch");
  CMatrix out(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + other.a_[i];
  return out;
}

CMatrix CMatrix::operator-(const CMatrix& other) const {
  if (dim_ != other.dim_) throw DimensionError("CMatrix difference: dimension mismatch");
  CMatrix out(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - other.a_[i];
  return out;
}

CMatrix CMatrix::operator*(Complex scalar) const {
  CMatrix out(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * scalar;
  return out;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out.at(c, r) = std::conj(at(r, c));
  return out;
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
  if (dim_ != other.dim_) throw DimensionError("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i) worst = std::max(worst, std::abs(a_[i] - other.a_[i]));
  return worst;
}

bool CMatrix::is_unitary(double tol) const {
  return (adjoint() * *this).max_abs_diff(identity(dim_)) <= tol;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.dim() * b.dim());
  for (std::size_t ra = 0; ra < a.dim(); ++ra)
    for (std::size_t ca = 0; ca < a.dim(); ++ca) {
      Complex v = a.at(ra, ca);
      if (v == 0.0) continue;
      for (std::size_t rb = 0; rb < b.dim(); ++rb)
        for (std::size_t cb = 0; cb < b.dim(); ++cb)
          out.at(ra * b.dim() + rb, ca * b.dim() + cb) = v * b.at(rb, cb);
    }
  return out;
}

CMatrix mat_i2() { return CMatrix::identity(2); }
CMatrix mat_x() { return CMatrix::from_rows({{0, 1}, {1, 0}}); }
CMatrix mat_y() { return CMatrix::from_rows({{0, Complex(0, -1)}, {Complex(0, 1), 0}}); }
CMatrix mat_z() { return CMatrix::from_rows({{1, 0}, {0, -1}}); }
CMatrix mat_h() {
  const double s = 1.0 / std::sqrt(2.0);
  return CMatrix::from_rows({{s, s}, {s, -s}});
}
CMatrix mat_s() { return CMatrix::from_rows({{1, 0}, {0, Complex(0, 1)}}); }

}  // namespace qlab
