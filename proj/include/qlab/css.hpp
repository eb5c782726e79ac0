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

#include <optional>
#include <vector>

#include "qlab/circuit.hpp"
#include "qlab/f2.hpp"
#include "qlab/pauli.hpp"
#include "qlab/rng.hpp"
#include "qlab/statevec.hpp"

namespace qlab {

/// CSS stabiliser code built from one parity-check matrix p: Z-stabilisers
/// Z^u and (unless disabled) X-stabilisers X^u for the rows u of p.
///
/// With both families active, p's rows must be pairwise orthogonal and
/// self-orthogonal so the generators commute; logical zero is the uniform
/// superposition over the row span of p and logical one its shift by the
/// all-ones vector.
///
/// With x_active = false (e.g. the 3-qubit repetition code, whose rows are
/// not self-orthogonal) only the Z-family is kept; the codewords are the
/// kernel of p and logical zero/one are |0...0> / |1...1>.
class CssCode {
 public:
  int n() const { return p_.cols(); }
  const F2Matrix& parity_check() const { return p_; }
  bool x_active() const { return x_active_; }

  /// Generator rows as Pauli operators (one per row of p).
  const std::vector<PauliOperator>& x_stabilisers() const { return x_stabs_; }
  const std::vector<PauliOperator>& z_stabilisers() const { return z_stabs_; }

  PauliOperator logical_x() const;  // transverse X^(1...1)
  PauliOperator logical_z() const;  // transverse Z^(1...1)

 private:
  friend CssCode build_css(const F2Matrix& p, bool x_active);
  F2Matrix p_;
  bool x_active_ = true;
  std::vector<PauliOperator> x_stabs_, z_stabs_;
};

/// Validates and builds the code.  With x_active, a non-self-orthogonal row
/// pair (i, j) is a construction error naming the pair.
CssCode build_css(const F2Matrix& p, bool x_active = true);

/// The [[7,1]] code on the Hamming parity-check matrix.
CssCode steane_code();
/// The 3-qubit repetition code, Z-stabilisers only.
CssCode repetition_code();

StateVector logical_zero(const CssCode& code);
StateVector logical_one(const CssCode& code);
StateVector logical_plus(const CssCode& code);   // (|0>_L + |1>_L)/sqrt(2)
StateVector logical_minus(const CssCode& code);  // (|0>_L - |1>_L)/sqrt(2)
/// alpha |0>_L + beta |1>_L, renormalized.
StateVector encode(const CssCode& code, Complex alpha, Complex beta);

/// CNOT network preparing the uniform superposition over a row span: each
/// pivot wire of the reduced matrix starts in |+> and fans out to the rest
/// of its row's support.  For a code with both families this is built from
/// p and prepares logical zero; for a Z-only code it is built from a kernel
/// basis of p and prepares logical plus (the n-qubit cat state).
Circuit encoding_circuit(const CssCode& code);

/// One syndrome-extraction circuit per generator row, on n+1 wires with the
/// ancilla at wire n+1.
///
/// basis 'X' (detects Z-errors): ancilla prepared |+>, CNOTs ancilla->data
/// over the row support, H on ancilla, Z-measurement.
/// basis 'Z' (detects X-errors): ancilla prepared |0>, CNOTs data->ancilla
/// over the row support, Z-measurement.
std::vector<Circuit> syndrome_circuits(const CssCode& code, char basis);

/// Ancilla fault injected while a syndrome circuit runs: after `after_cnots`
/// of the CNOTs of generator `row` in family `basis`, apply `pauli` to that
/// circuit's ancilla.
struct AncillaFault {
  char basis;       // 'X' or 'Z'
  int row;          // 1-based generator row
  int after_cnots;  // 0 = before the first CNOT
  char pauli;       // 'X', 'Y' or 'Z'
};

struct SyndromeOptions {
  bool x_first = true;              // X-family measured before Z-family
  std::vector<int> data_wires;      // default 1..n; lets the code block sit inside a larger state
  std::vector<AncillaFault> faults;
};

struct SyndromeResult {
  F2Vector x_syndrome;  // one bit per X-generator; empty if family inactive
  F2Vector z_syndrome;
};

/// Measures every active generator through its extraction circuit.  Each
/// ancilla is a fresh wire appended to the state, measured, then dropped;
/// no implicit reset.  The state argument is left in the post-measurement
/// state.
SyndromeResult extract_syndrome(StateVector& state, const CssCode& code, Rng& rng,
                                const SyndromeOptions& options = {});

/// Correction from the lookup decoder: X-part decoded from the Z-syndrome,
/// Z-part from the X-syndrome.  nullopt when either syndrome matches no
/// error of weight <= 1.
std::optional<PauliOperator> correct(const CssCode& code, const F2Vector& x_syndrome,
                                     const F2Vector& z_syndrome);

struct EcReport {
  SyndromeResult syndromes;
  std::optional<PauliOperator> correction;  // in data-block numbering (n qubits)
  bool corrected = false;
};

/// Full error-correction round: extract syndromes, decode, apply the
/// correction to the data wires.  On an uncorrectable syndrome the state is
/// left as measured and corrected = false.
EcReport ec_round(StateVector& state, const CssCode& code, Rng& rng,
                  const SyndromeOptions& options = {});

}  // namespace qlab
