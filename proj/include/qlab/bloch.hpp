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

#include <array>
#include <complex>

#include "qlab/matrix.hpp"
#include "qlab/rng.hpp"
#include "qlab/statevec.hpp"

namespace qlab {

/// Point on the unit sphere in axis order (z, x, y): the state is the +1
/// eigenvector of z.Z + x.X + y.Y.
struct BlochPoint {
  double z, x, y;
};

/// (|a|^2 - |b|^2, 2 Re(a conj(b)), -2 Im(a conj(b))) for the unit spinor
/// (a, b).  Orthogonal states map to antipodal points.
BlochPoint bloch_point(Complex alpha, Complex beta);
BlochPoint bloch_point(const StateVector& one_qubit);

/// 3x3 real matrix in basis order (Z, X, Y).
struct Mat3 {
  std::array<std::array<double, 3>, 3> a{};
  static Mat3 identity();
  Mat3 operator*(const Mat3& other) const;
  double max_abs_diff(const Mat3& other) const;
};

/// Special unitary [[a, -conj(b)], [b, conj(a)]] with |a|^2 + |b|^2 = 1.
struct Su2 {
  Complex a, b;
  CMatrix dense() const;
  Su2 operator*(const Su2& other) const;
};

/// Image of u under the 2-to-1 homomorphism SU(2) -> SO(3): column j is the
/// expansion of u P_j u^{-1} in (Z, X, Y).  Kernel {+I, -I}, so
/// double_cover(u) == double_cover(-u).
Mat3 double_cover(const Su2& u);

/// Measurement direction tilted by theta in the z-x plane:
/// R = cos(theta) Z + sin(theta) X, with +1 eigenvector
/// (cos(theta/2), sin(theta/2)) and -1 eigenvector
/// (-sin(theta/2), cos(theta/2)).
struct RotatedMeasurement {
  double theta;
  CMatrix r;
  StateVector plus;
  StateVector minus;
};
RotatedMeasurement rotated_measurement(double theta);

/// Repeatedly measures a spin that starts in |0> along directions rotating
/// in n_steps increments up to theta_total.  Each step projects with
/// (I + R)/2 (or (I - R)/2 on a backwards outcome) and renormalizes by the
/// positive norm only, so the continuous phase of the spinor survives: at
/// theta_total = 2 pi the state returns to -|0>.
///
/// A backwards outcome at any step has probability sin^2(delta/2) <=
/// theta^2 / (4 n); in strict mode it aborts (throws NumericError), in the
/// default mode it is recorded and the walk continues from the projected
/// state.
struct SlowRotationResult {
  StateVector final_state;
  int backwards_events;
  std::vector<int> backwards_steps;  // 1-based step indices
};
SlowRotationResult slow_rotation_walk(double theta_total, int n_steps, Rng& rng,
                                      bool strict = false);

}  // namespace qlab
