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

#include "qlab/algorithms.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>

#include "qlab/errors.hpp"
#include "qlab/measure.hpp"

namespace qlab {

StateVector transverse_hadamard(const F2Vector& v) {
  StateVector state = StateVector::basis(v.length(), v);
  for (int q = 1; q <= v.length(); ++q) state.apply(Gate::h(q));
  return state;
}

CorrelationSpectrum correlation_spectrum_classical(const BooleanFunction& f) {
  const int n = f.arity();
  if (n > 20) throw ResourceError("correlation spectrum capped at 20 inputs");
  const std::uint64_t size = 1ULL << n;
  // Integer Walsh accumulation over (-1)^f; exact until the final division.
  std::vector<std::int64_t> acc(size);
  for (std::uint64_t v = 0; v < size; ++v) acc[v] = f.eval(v) ? -1 : 1;
  for (std::uint64_t half = 1; half < size; half <<= 1)
    for (std::uint64_t base = 0; base < size; base += half << 1)
      for (std::uint64_t i = base; i < base + half; ++i) {
        const std::int64_t a = acc[i], b = acc[i + half];
        acc[i] = a + b;
        acc[i + half] = a - b;
      }
  CorrelationSpectrum spectrum{n, std::vector<double>(size)};
  for (std::uint64_t w = 0; w < size; ++w)
    spectrum.c[w] = static_cast<double>(acc[w]) / static_cast<double>(size);
  return spectrum;
}

Circuit qdft_circuit(const BooleanFunction& f) {
  const int n = f.arity();
  Circuit c(n + 1);
  c.gate(Gate::x(n + 1));
  for (int q = 1; q <= n + 1; ++q) c.gate(Gate::h(q));
  std::vector<int> inputs(static_cast<std::size_t>(n));
  std::iota(inputs.begin(), inputs.end(), 1);
  c.gate(Gate::controlled_boolean(f, inputs, n + 1));
  for (int q = 1; q <= n + 1; ++q) c.gate(Gate::h(q));
  std::vector<int> all(static_cast<std::size_t>(n) + 1);
  std::iota(all.begin(), all.end(), 1);
  c.measure(all, 'Z');
  return c;
}

StateVector qdft_state(const BooleanFunction& f) {
  Circuit c = qdft_circuit(f);
  StateVector state(c.num_qubits);
  for (const auto& inst : c.steps)
    if (const auto* gs = std::get_if<GateStep>(&inst)) state.apply(gs->gate);
  return state;
}

DeutschJozsaResult deutsch_jozsa(const BooleanFunction& f, Rng& rng) {
  const int n = f.arity();
  ExecutionResult res = execute(qdft_circuit(f), rng);
  const F2Vector& bits = res.measurements.at(0).outcome;
  F2Vector w(n);
  for (int q = 1; q <= n; ++q) w.set(q, bits.get(q));
  return DeutschJozsaResult{w, w.is_zero(), bits.get(n + 1)};
}

Circuit bell_prepare() {
  Circuit c(2);
  c.gate(Gate::h(1));
  c.gate(Gate::cnot(1, 2));
  return c;
}

StateVector bell_phi() {
  StateVector s(2);
  s.apply(Gate::h(1));
  s.apply(Gate::cnot(1, 2));
  return s;
}

std::array<StateVector, 4> bell_basis() {
  // Index b = (top << 1) | bottom of the gadget readout: I, X, Z, XZ on wire 1.
  std::array<StateVector, 4> basis{bell_phi(), bell_phi(), bell_phi(), bell_phi()};
  apply_pauli(basis[1], PauliOperator::x_on(2, 1));
  apply_pauli(basis[2], PauliOperator::z_on(2, 1));
  apply_pauli(basis[3], PauliOperator::from_masks(F2Vector::from_string("10"),
                                                  F2Vector::from_string("10")));
  return basis;
}

BellGadgetResult bell_measure_gadget(const StateVector& two_qubits, Rng& rng) {
  if (two_qubits.num_qubits() != 2) throw DimensionError("gadget works on two qubits");
  StateVector state = two_qubits;
  state.apply(Gate::cnot(1, 2));
  state.apply(Gate::h(1));
  MeasurementRecord rec = measure(state, {1, 2}, rng);
  return BellGadgetResult{rec.outcome.get(1) ? 1 : 0, rec.outcome.get(2) ? 1 : 0, std::move(state)};
}

SuperdenseResult superdense(int b1, int b2, Rng& rng) {
  if ((b1 & ~1) || (b2 & ~1)) throw DimensionError("superdense sends two bits; each must be 0 or 1");
  StateVector state = bell_phi();
  // (b1, b2) -> I / X / Z / XZ on the sender's wire.
  F2Vector x(2), z(2);
  x.set(1, b2 != 0);
  z.set(1, b1 != 0);
  apply_pauli(state, PauliOperator::from_masks(x, z));
  BellGadgetResult got = bell_measure_gadget(state, rng);
  return SuperdenseResult{b1, b2, got.top, got.bottom};
}

TeleportResult teleport(const StateVector& psi, Rng& rng) {
  if (psi.num_qubits() != 1) throw DimensionError("teleport sends one qubit");
  if (std::abs(psi.norm() - 1.0) > 1e-9) throw NumericError("input state must be normalized");
  StateVector full = tensor(psi, bell_phi());
  std::array<StateVector, 4> basis = bell_basis();

  // Project wires (1,2) onto each Bell state; the residual lives on wire 3.
  std::array<std::vector<Complex>, 4> residual;
  std::vector<double> probs(4);
  for (int b = 0; b < 4; ++b) {
    residual[static_cast<std::size_t>(b)].assign(2, Complex(0.0));
    for (std::uint64_t pair = 0; pair < 4; ++pair)
      for (std::uint64_t m = 0; m < 2; ++m)
        residual[static_cast<std::size_t>(b)][m] +=
            std::conj(basis[static_cast<std::size_t>(b)].amp(pair)) * full.amp((pair << 1) | m);
    probs[static_cast<std::size_t>(b)] =
        std::norm(residual[static_cast<std::size_t>(b)][0]) +
        std::norm(residual[static_cast<std::size_t>(b)][1]);
  }

  const int pick = static_cast<int>(sample_index(probs, rng));
  StateVector receiver =
      StateVector::from_amplitudes(1, std::move(residual[static_cast<std::size_t>(pick)]));
  receiver.normalize();

  F2Vector x(1), z(1);
  x.set(1, (pick & 1) != 0);
  z.set(1, (pick & 2) != 0);
  return TeleportResult{std::move(receiver), PauliOperator::from_masks(x, z), pick};
}

std::vector<std::pair<std::string, int>> bell_observable_eigen() {
  const CMatrix e = kron(mat_x(), mat_x()) + kron(mat_y(), mat_y()) + kron(mat_z(), mat_z());
  const std::array<StateVector, 4> basis = bell_basis();
  const std::array<const char*, 4> labels{"Phi", "X.Phi", "Z.Phi", "XZ.Phi"};
  std::vector<std::pair<std::string, int>> out;
  for (int b = 0; b < 4; ++b) {
    const StateVector& v = basis[static_cast<std::size_t>(b)];
    // Rayleigh quotient, then an eigenvector check against the rounded value.
    Complex quotient = 0.0;
    std::vector<Complex> ev(4, Complex(0.0));
    for (std::uint64_t r = 0; r < 4; ++r) {
      for (std::uint64_t c = 0; c < 4; ++c) ev[r] += e.at(r, c) * v.amp(c);
      quotient += std::conj(v.amp(r)) * ev[r];
    }
    const int lambda = static_cast<int>(std::lround(quotient.real()));
    for (std::uint64_t r = 0; r < 4; ++r)
      if (std::abs(ev[r] - static_cast<double>(lambda) * v.amp(r)) > 1e-12)
        throw NumericError("Bell state is not an eigenvector of XX+YY+ZZ");
    out.emplace_back(labels[static_cast<std::size_t>(b)], lambda);
  }
  return out;
}

}  // namespace qlab
