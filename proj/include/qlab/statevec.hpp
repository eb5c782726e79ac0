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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlab/f2.hpp"
#include "qlab/matrix.hpp"

namespace qlab {

/// Hard cap for dense simulation.
inline constexpr int kMaxQubits = 24;
/// Payload unitarity tolerance, checked at gate construction.
inline constexpr double kUnitaryTol = 1e-10;
/// Norm-preservation tolerance for runtime checks.
inline constexpr double kNormTol = 1e-12;
/// Branches with projected amplitude below this are pruned.
inline constexpr double kAmplitudePrune = 1e-14;

/// Boolean function {0,1}^arity -> {0,1}, stored as a truth table indexed by
/// the input read as an integer (first argument = most significant bit).
class BooleanFunction {
 public:
  BooleanFunction() = default;
  BooleanFunction(int arity, std::vector<std::uint8_t> table);

  static BooleanFunction constant(int arity, bool value);
  /// v -> v . w
  static BooleanFunction dot_mask(const F2Vector& w);
  /// Uniformly random table with exactly 2^(arity-1) ones.
  static BooleanFunction balanced_sample(int arity, std::uint64_t seed);
  /// Table from hex digits, first digit = inputs 0..3 (most significant bit
  /// first); with all chars '0'/'1' and length == 2^arity the text is read
  /// as a plain bit string instead.
  static BooleanFunction from_text(int arity, const std::string& text);
  /// As from_text, inferring the arity when absent: an all-0/1 text of
  /// power-of-two length is a bit string, otherwise hex.
  static BooleanFunction from_text_auto(const std::string& text,
                                        std::optional<int> arity = std::nullopt);

  int arity() const { return arity_; }
  bool eval(std::uint64_t input) const { return table_[input] != 0; }
  bool eval(const F2Vector& v) const { return eval(v.to_index()); }
  const std::vector<std::uint8_t>& table() const { return table_; }
  int ones() const;
  bool is_constant() const;
  bool is_balanced() const;
  std::string to_bit_string() const;
  /// Canonical source form: hex for arity >= 2, bit string below that.
  std::string to_text() const;

  bool operator==(const BooleanFunction& other) const = default;

 private:
  int arity_ = 0;
  std::vector<std::uint8_t> table_;
};

/// Quantum gate bound to 1-based wires.  Payload unitaries are validated
/// (U+U = I within kUnitaryTol) when the gate is built.
struct Gate {
  enum class Kind { X, Y, Z, H, S, Cnot, Swap, ControlledBoolean, CustomUnitary, ControlledUnitary };

  Kind kind;
  std::vector<int> wires;   // meaning depends on kind; always distinct
  BooleanFunction boolean;  // ControlledBoolean: wires = [output, inputs...]
  CMatrix payload;          // CustomUnitary / ControlledUnitary

  static Gate x(int q);
  static Gate y(int q);
  static Gate z(int q);
  static Gate h(int q);
  static Gate s(int q);
  static Gate cnot(int control, int target);
  static Gate swap(int a, int b);
  static Gate controlled_boolean(const BooleanFunction& f, const std::vector<int>& inputs, int output);
  static Gate custom_unitary(const CMatrix& u, const std::vector<int>& wires);
  /// Applies u to `wires` when `control` reads 1.
  static Gate controlled_unitary(const CMatrix& u, const std::vector<int>& wires, int control);

  std::string name() const;
};

/// Dense state vector on n qubits (1 <= n <= kMaxQubits).  Wire 1 is the
/// most significant bit of the amplitude index, so |100> sits at index 4.
/// Global phase is physically meaningless but never normalized away.
class StateVector {
 public:
  explicit StateVector(int num_qubits);  // |0...0>
  static StateVector basis(int num_qubits, const F2Vector& bits);
  static StateVector from_amplitudes(int num_qubits, std::vector<Complex> amps);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t size() const { return amps_.size(); }
  Complex amp(std::uint64_t index) const { return amps_[index]; }
  Complex& amp(std::uint64_t index) { return amps_[index]; }
  Complex amplitude(const F2Vector& bits) const;
  const std::vector<Complex>& amplitudes() const { return amps_; }

  double norm() const;       // sqrt(sum |a|^2)
  void normalize();          // errors on a numerically zero vector
  void scale(Complex c);

  void apply(const Gate& g);

  /// Bit mask of 1-based wire q in the amplitude index.
  std::uint64_t wire_mask(int q) const;

  bool operator==(const StateVector& other) const = default;

 private:
  int num_qubits_ = 0;
  std::vector<Complex> amps_;
};

StateVector apply_gate(StateVector state, const Gate& g);
StateVector apply_controlled_boolean(StateVector state, const BooleanFunction& f,
                                     const std::vector<int>& inputs, int output);

Complex inner_product(const StateVector& a, const StateVector& b);  // <a|b>

/// Kronecker product; a's qubits become the high-order wires.
StateVector tensor(const StateVector& a, const StateVector& b);

/// Removes wire q, which must carry the definite basis value `bit`
/// (all amplitudes on the other branch below kAmplitudePrune).
StateVector drop_qubit(const StateVector& state, int q, bool bit);

/// |phi|^2 overlap magnitude |<a|b>|.
double fidelity(const StateVector& a, const StateVector& b);

/// Builds the dense matrix of a gate sequence on n qubits by applying it to
/// every basis state (oracle-grade, n small).
CMatrix circuit_unitary(int num_qubits, const std::vector<Gate>& gates);

}  // namespace qlab
