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
#include <string>
#include <vector>

#include "qlab/f2.hpp"
#include "qlab/matrix.hpp"
#include "qlab/statevec.hpp"

namespace qlab {

struct Circuit;  // circuit.hpp

/// n-qubit Pauli operator i^k * prod_q X_q^{x_q} Z_q^{z_q}, with the phase
/// exponent k in {0,1,2,3} tracked exactly.
///
/// On a basis state: P|v> = i^k (-1)^(z.v) |v + x>.
///
/// Sites with x = z = 1 are X.Z = -iY; str() renders them as Y with the
/// display phase adjusted accordingly, e.g. the stored product of X and Z on
/// one qubit prints as "-iY1".
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(int num_qubits);

  static PauliOperator identity(int num_qubits);
  static PauliOperator x_on(int num_qubits, int q);
  static PauliOperator y_on(int num_qubits, int q);
  static PauliOperator z_on(int num_qubits, int q);
  /// X^u: X on the support of u.
  static PauliOperator from_x_mask(const F2Vector& u);
  /// Z^u: Z on the support of u.
  static PauliOperator from_z_mask(const F2Vector& u);
  static PauliOperator from_masks(const F2Vector& x, const F2Vector& z, int phase_exponent = 0);

  /// Accepts "+X1Z3Z5", "-iY2", "X2,Z5", bitmask forms "Z^0000101",
  /// "X^1010101Z^0110011", and "I".  Inverse of str() / compact_str().
  static PauliOperator parse(const std::string& text, int num_qubits);

  int num_qubits() const { return n_; }
  const F2Vector& x_bits() const { return x_; }
  const F2Vector& z_bits() const { return z_; }
  int phase_exponent() const { return k_; }  // phase = i^k
  Complex phase() const;
  bool is_identity() const;

  /// Per-site letter in {'I','X','Y','Z'} ignoring phase.
  char letter(int q) const;

  PauliOperator& multiply_right(const PauliOperator& other);  // this = this * other
  bool commutes(const PauliOperator& other) const;  // symplectic form
  /// True when P*P = I exactly (phase included), i.e. P is a Hermitian
  /// involution usable as a stabiliser observable.
  bool is_involution() const;

  /// "+X1Z3Z5", "-iY2", "+I" (phase always shown).
  std::string str() const;
  /// str() without a leading '+'.
  std::string compact_str() const;
  /// "X^....Z^...." with phase prefix; single-family operators render as one
  /// term, e.g. "Z^0000101".
  std::string mask_str() const;

  CMatrix dense() const;  // 2^n x 2^n; n small

  bool operator==(const PauliOperator& other) const = default;

 private:
  int n_ = 0;
  F2Vector x_, z_;
  int k_ = 0;
};

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
inline PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) { return multiply(a, b); }
bool commutes(const PauliOperator& a, const PauliOperator& b);

/// g P g+ for a Clifford gate g (X, Y, Z, H, S, CNOT, SWAP), phases exact.
/// The map is extended multiplicatively from the generator images
/// (e.g. CNOT: X_c -> X_c X_t, Z_t -> Z_c Z_t).
PauliOperator conjugate_through(const Gate& g, const PauliOperator& p);

/// Folds conjugate_through over circuit instructions from `first_step`
/// (instruction index) to the end: the result is the end-of-circuit
/// equivalent of a fault `p` injected just before `first_step`.
/// `init` lines conjugate through their preparation gates; propagation
/// stops at the first measurement; any non-Clifford gate raises
/// UnsupportedGateError naming the step.  Other faults in the circuit
/// toggle the sign when they anticommute with the passing operator; they
/// count at the position where they fire (their label, or their own line
/// when unlabeled), matching execution order.
PauliOperator propagate(const PauliOperator& p, const Circuit& circuit, std::size_t first_step = 0);

/// Restriction of p to a wire subset (1-based), e.g. the data block of a
/// syndrome-extraction circuit.  Phase is kept.
PauliOperator restrict_to(const PauliOperator& p, const std::vector<int>& wires);

/// Embeds p so its qubit j acts on wires[j] of a `width`-qubit register;
/// inverse of restrict_to.
PauliOperator embed(const PauliOperator& p, const std::vector<int>& wires, int width);

void apply_pauli(StateVector& state, const PauliOperator& p);
StateVector pauli_applied(StateVector state, const PauliOperator& p);  // value form

}  // namespace qlab
