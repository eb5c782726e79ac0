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

#include "qlab/bloch.hpp"

#include <cmath>

#include "qlab/errors.hpp"
#include "qlab/measure.hpp"

namespace qlab {

BlochPoint bloch_point(Complex alpha, Complex beta) {
  const double norm2 = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm2 - 1.0) > 1e-9) throw NumericError("bloch_point needs a unit spinor");
  const Complex cross = alpha * std::conj(beta);
  // + 0.0 clears the sign of negative zeros.
  return BlochPoint{std::norm(alpha) - std::norm(beta) + 0.0, 2.0 * cross.real() + 0.0,
                    -2.0 * cross.imag() + 0.0};
}

BlochPoint bloch_point(const StateVector& one_qubit) {
  if (one_qubit.num_qubits() != 1) throw DimensionError("bloch_point works on one qubit");
  return bloch_point(one_qubit.amp(0), one_qubit.amp(1));
}

Mat3 Mat3::identity() {
  Mat3 m;
  for (int i = 0; i < 3; ++i) m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
  return m;
}

Mat3 Mat3::operator*(const Mat3& other) const {
  Mat3 out;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 3; ++k) acc += a[r][k] * other.a[k][c];
      out.a[r][c] = acc;
    }
  return out;
}

double Mat3::max_abs_diff(const Mat3& other) const {
  double worst = 0.0;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) worst = std::max(worst, std::abs(a[r][c] - other.a[r][c]));
  return worst;
}

CMatrix Su2::dense() const {
  return CMatrix::from_rows({{a, -std::conj(b)}, {b, std::conj(a)}});
}

Su2 Su2::operator*(const Su2& other) const {
  // Matrix product of the dense forms, read off the first column.
  return Su2{a * other.a - std::conj(b) * other.b, b * other.a + std::conj(a) * other.b};
}

Mat3 double_cover(const Su2& u) {
  const Complex a = u.a, b = u.b;
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-10)
    throw NumericError("double_cover needs |a|^2 + |b|^2 = 1");
  Mat3 m;
  const Complex ab = a * b;
  const Complex abar_b = a * std::conj(b);
  const Complex a2_m = a * a - std::conj(b) * std::conj(b);  // a^2 - conj(b)^2
  const Complex a2_p = a * a + std::conj(b) * std::conj(b);  // a^2 + conj(b)^2
  m.a = {{{std::norm(a) - std::norm(b), -2.0 * ab.real(), -2.0 * ab.imag()},
          {2.0 * abar_b.real(), a2_m.real(), a2_p.imag()},
          {-2.0 * abar_b.imag(), -a2_m.imag(), a2_p.real()}}};
  return m;
}

RotatedMeasurement rotated_measurement(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double ch = std::cos(theta / 2.0), sh = std::sin(theta / 2.0);
  return RotatedMeasurement{
      theta,
      CMatrix::from_rows({{c, s}, {s, -c}}),
      StateVector::from_amplitudes(1, {ch, sh}),
      StateVector::from_amplitudes(1, {-sh, ch}),
  };
}

SlowRotationResult slow_rotation_walk(double theta_total, int n_steps, Rng& rng, bool strict) {
  if (n_steps < 1) throw DimensionError("slow rotation needs at least one step");
  StateVector state(1);
  SlowRotationResult result{state, 0, {}};
  for (int k = 1; k <= n_steps; ++k) {
    const double theta = theta_total * static_cast<double>(k) / static_cast<double>(n_steps);
    MeasurementRecord rec = measure_stabiliser(state, rotated_measurement(theta).r, rng);
    if (rec.outcome.get(1)) {
      if (strict)
        throw NumericError("spin measured against the apparatus at step " + std::to_string(k));
      ++result.backwards_events;
      result.backwards_steps.push_back(k);
    }
  }
  result.final_state = std::move(state);
  return result;
}

}  // namespace qlab
