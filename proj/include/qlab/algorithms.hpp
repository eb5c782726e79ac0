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
#include <string>
#include <utility>
#include <vector>

#include "qlab/circuit.hpp"
#include "qlab/f2.hpp"
#include "qlab/pauli.hpp"
#include "qlab/rng.hpp"
#include "qlab/statevec.hpp"

namespace qlab {

/// H on every wire of a basis state |v>: 2^(-n/2) sum_w (-1)^(v.w) |w>.
StateVector transverse_hadamard(const F2Vector& v);

/// Correlation of f with the linear form v -> v.w:
/// c(w) = P[f(v) = v.w] - P[f(v) != v.w] over uniform v.
struct CorrelationSpectrum {
  int n;
  std::vector<double> c;  // indexed by w as an integer, first bit most significant
  double at(const F2Vector& w) const { return c[w.to_index()]; }
};

/// Classical oracle for the spectrum, computed exactly from the truth table
/// (integer Walsh-Hadamard accumulation, O(n 2^n)); n <= 20.
CorrelationSpectrum correlation_spectrum_classical(const BooleanFunction& f);

/// Transform circuit on n+1 wires: X on the last wire, H everywhere, the
/// controlled-boolean of f, H everywhere, Z-measurement of all wires.
/// Exactly one X, 2(n+1) H and one boolean-function gate.  Just before
/// measurement the state is sum_w c(w) |w>|1>.
Circuit qdft_circuit(const BooleanFunction& f);

/// Pre-measurement state of qdft_circuit(f).
StateVector qdft_state(const BooleanFunction& f);

struct DeutschJozsaResult {
  F2Vector w;         // measured transform register
  bool constant;      // verdict: w == 0
  bool output_bit;    // measured last wire (always 1)
};

/// One-query constant-vs-balanced decision.  Behaviour on a function that is
/// neither constant nor balanced is undefined (the verdict is whatever the
/// sampled w gives).
DeutschJozsaResult deutsch_jozsa(const BooleanFunction& f, Rng& rng);

/// |Phi> = (|00> + |11>)/sqrt(2) preparation: H on wire 1, CNOT 1->2.
Circuit bell_prepare();
StateVector bell_phi();
/// The four Bell states P|Phi> for P in {I, X1, Z1, X1Z1}.
std::array<StateVector, 4> bell_basis();

/// Bell-basis measurement gadget: CNOT 1->2, H 1, Z-measure both wires.
/// Bits (top, bottom) identify P: (0,0) I, (0,1) X, (1,0) Z, (1,1) XZ.
struct BellGadgetResult {
  int top;
  int bottom;
  StateVector post;
};
BellGadgetResult bell_measure_gadget(const StateVector& two_qubits, Rng& rng);

/// Two classical bits through one entangled pair: the sender applies
/// I/X/Z/XZ on their half per (b1, b2), the receiver runs the gadget.
struct SuperdenseResult {
  int sent_b1, sent_b2;
  int received_b1, received_b2;
};
SuperdenseResult superdense(int b1, int b2, Rng& rng);

/// Teleports wire 1 of (psi tensor |Phi>) by projecting wires 1,2 directly
/// onto the Bell basis (the gadget is *not* equivalent to this projection;
/// its CNOT disturbs the other wires).  Returns the receiver's conditional
/// state on wire 3 and the Pauli the receiver must apply to recover psi.
struct TeleportResult {
  StateVector receiver;      // 1 qubit, before correction
  PauliOperator correction;  // in {I, X, Z, XZ} on 1 qubit
  int outcome;               // Bell index 0..3 (I, X, Z, XZ)
};
TeleportResult teleport(const StateVector& psi, Rng& rng);

/// Eigenvalues of E = XX + YY + ZZ on the Bell basis: +1 on P|Phi> for
/// P in {I, X, Z} and -3 on the singlet XZ|Phi>.  Each pair is verified
/// dense (E b = lambda b) before being returned.
std::vector<std::pair<std::string, int>> bell_observable_eigen();

}  // namespace qlab
