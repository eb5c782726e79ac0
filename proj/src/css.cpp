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

#include "qlab/css.hpp"

#include <cmath>
#include <numeric>

#include "qlab/errors.hpp"

namespace qlab {

CssCode build_css(const F2Matrix& p, bool x_active) {
  if (p.rows() < 1 || p.cols() < 1) throw DimensionError("parity check must be non-empty");
  if (x_active) {
    for (int i = 1; i <= p.rows(); ++i)
      for (int j = i; j <= p.rows(); ++j)
        if (dot(p.row(i), p.row(j)) != 0)
          throw DimensionError("parity-check rows " + std::to_string(i) + " and " +
                               std::to_string(j) +
                               " are not orthogonal; X- and Z-stabilisers would anticommute");
  }
  CssCode code;
  code.p_ = p;
  code.x_active_ = x_active;
  for (int r = 1; r <= p.rows(); ++r) {
    code.z_stabs_.push_back(PauliOperator::from_z_mask(p.row(r)));
    if (x_active) code.x_stabs_.push_back(PauliOperator::from_x_mask(p.row(r)));
  }
  return code;
}

CssCode steane_code() { return build_css(hamming_parity_check(), true); }

CssCode repetition_code() { return build_css(repetition_parity_check(), false); }

namespace {

F2Vector all_ones(int n) {
  F2Vector v(n);
  for (int i = 1; i <= n; ++i) v.set(i, true);
  return v;
}

StateVector uniform_over(int n, const std::vector<F2Vector>& words, const F2Vector& shift) {
  std::vector<Complex> amps(1ULL << n, 0.0);
  const double a = 1.0 / std::sqrt(static_cast<double>(words.size()));
  for (const auto& w : words) amps[(w + shift).to_index()] = a;
  return StateVector::from_amplitudes(n, std::move(amps));
}

}  // namespace

PauliOperator CssCode::logical_x() const { return PauliOperator::from_x_mask(all_ones(n())); }

PauliOperator CssCode::logical_z() const { return PauliOperator::from_z_mask(all_ones(n())); }

StateVector logical_zero(const CssCode& code) {
  const int n = code.n();
  if (!code.x_active()) return StateVector::basis(n, F2Vector(n));
  return uniform_over(n, row_span(code.parity_check()), F2Vector(n));
}

StateVector logical_one(const CssCode& code) {
  const int n = code.n();
  const F2Vector ones = all_ones(n);
  if (!code.x_active()) {
    if (!syndrome(code.parity_check(), ones).is_zero())
      throw DimensionError("all-ones word is not in the code; no transverse logical one");
    return StateVector::basis(n, ones);
  }
  auto span = row_span(code.parity_check());
  for (const auto& w : span)
    if (w == ones) throw DimensionError("all-ones word lies in the stabiliser span; logical one degenerates");
  return uniform_over(n, span, ones);
}

StateVector logical_plus(const CssCode& code) { return encode(code, 1.0, 1.0); }

StateVector logical_minus(const CssCode& code) { return encode(code, 1.0, -1.0); }

StateVector encode(const CssCode& code, Complex alpha, Complex beta) {
  StateVector zero = logical_zero(code);
  StateVector one = logical_one(code);
  std::vector<Complex> amps(zero.size());
  for (std::uint64_t i = 0; i < zero.size(); ++i) amps[i] = alpha * zero.amp(i) + beta * one.amp(i);
  StateVector out = StateVector::from_amplitudes(code.n(), std::move(amps));
  out.normalize();
  return out;
}

Circuit encoding_circuit(const CssCode& code) {
  const int n = code.n();
  F2Matrix m;
  if (code.x_active()) {
    m = rref(code.parity_check());
  } else {
    auto basis = kernel_basis(code.parity_check());
    if (basis.empty()) throw DimensionError("parity check has trivial kernel; nothing to encode");
    m = rref(F2Matrix::from_rows(basis));
  }
  std::vector<int> pivots = pivot_columns(m);
  Circuit c(n);
  for (int piv : pivots) c.init(piv, '+');
  for (int r = 1; r <= m.rows(); ++r) {
    const int piv = pivots[static_cast<std::size_t>(r - 1)];
    for (int col : m.row(r).support())
      if (col != piv) c.gate(Gate::cnot(piv, col));
  }
  return c;
}

std::vector<Circuit> syndrome_circuits(const CssCode& code, char basis) {
  if (basis != 'X' && basis != 'Z') throw DimensionError("syndrome basis must be 'X' or 'Z'");
  std::vector<Circuit> out;
  if (basis == 'X' && !code.x_active()) return out;
  const int n = code.n();
  const int anc = n + 1;
  for (int r = 1; r <= code.parity_check().rows(); ++r) {
    Circuit c(n + 1);
    if (basis == 'X') {
      c.init(anc, '+');
      for (int col : code.parity_check().row(r).support()) c.gate(Gate::cnot(anc, col));
      c.gate(Gate::h(anc));
    } else {
      c.init(anc, '0');
      for (int col : code.parity_check().row(r).support()) c.gate(Gate::cnot(col, anc));
    }
    c.measure({anc}, 'Z');
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

// Runs one extraction circuit against `state` with the ancilla appended as a
// fresh top wire, firing any matching injected faults between CNOTs.
bool run_extraction(StateVector& state, const CssCode& code, char family, int row,
                    const std::vector<int>& data_wires, const std::vector<AncillaFault>& faults,
                    Rng& rng) {
  state = tensor(state, StateVector(1));
  const int anc = state.num_qubits();

  auto fire = [&](int after_cnots) {
    for (const auto& f : faults) {
      if (f.basis != family || f.row != row || f.after_cnots != after_cnots) continue;
      switch (f.pauli) {
        case 'X': apply_pauli(state, PauliOperator::x_on(anc, anc)); break;
        case 'Y': apply_pauli(state, PauliOperator::y_on(anc, anc)); break;
        case 'Z': apply_pauli(state, PauliOperator::z_on(anc, anc)); break;
        default: throw DimensionError("ancilla fault must be X, Y or Z");
      }
    }
  };

  if (family == 'X') state.apply(Gate::h(anc));
  int done = 0;
  fire(done);
  for (int col : code.parity_check().row(row).support()) {
    const int data = data_wires[static_cast<std::size_t>(col - 1)];
    state.apply(family == 'X' ? Gate::cnot(anc, data) : Gate::cnot(data, anc));
    fire(++done);
  }
  if (family == 'X') state.apply(Gate::h(anc));

  MeasurementRecord rec = measure(state, {anc}, rng);
  const bool bit = rec.outcome.get(1);
  state = drop_qubit(state, anc, bit);
  return bit;
}

std::vector<int> resolve_data_wires(const StateVector& state, const CssCode& code,
                                    const SyndromeOptions& options) {
  std::vector<int> wires = options.data_wires;
  if (wires.empty()) {
    wires.resize(static_cast<std::size_t>(code.n()));
    std::iota(wires.begin(), wires.end(), 1);
  }
  if (wires.size() != static_cast<std::size_t>(code.n()))
    throw DimensionError("data wire list must cover the whole code block");
  for (int w : wires) (void)state.wire_mask(w);
  return wires;
}

}  // namespace

SyndromeResult extract_syndrome(StateVector& state, const CssCode& code, Rng& rng,
                                const SyndromeOptions& options) {
  const std::vector<int> data = resolve_data_wires(state, code, options);
  const int rows = code.parity_check().rows();
  SyndromeResult result;
  result.x_syndrome = F2Vector(code.x_active() ? rows : 0);
  result.z_syndrome = F2Vector(rows);

  std::string order = options.x_first ? "XZ" : "ZX";
  for (char family : order) {
    if (family == 'X' && !code.x_active()) continue;
    for (int r = 1; r <= rows; ++r) {
      bool bit = run_extraction(state, code, family, r, data, options.faults, rng);
      if (family == 'X')
        result.x_syndrome.set(r, bit);
      else
        result.z_syndrome.set(r, bit);
    }
  }
  return result;
}

std::optional<PauliOperator> correct(const CssCode& code, const F2Vector& x_syndrome,
                                     const F2Vector& z_syndrome) {
  const F2Matrix& p = code.parity_check();
  if (z_syndrome.length() != p.rows()) throw DimensionError("Z-syndrome length != generator count");
  if (x_syndrome.length() != (code.x_active() ? p.rows() : 0))
    throw DimensionError("X-syndrome length mismatch");

  auto x_part = decode_single_error(p, z_syndrome);  // Z-syndromes flag bit flips
  if (!x_part) return std::nullopt;
  PauliOperator out = PauliOperator::from_x_mask(*x_part);
  if (code.x_active()) {
    auto z_part = decode_single_error(p, x_syndrome);  // X-syndromes flag phase flips
    if (!z_part) return std::nullopt;
    out.multiply_right(PauliOperator::from_z_mask(*z_part));
  }
  return out;
}

EcReport ec_round(StateVector& state, const CssCode& code, Rng& rng,
                  const SyndromeOptions& options) {
  const std::vector<int> data = resolve_data_wires(state, code, options);
  EcReport report;
  report.syndromes = extract_syndrome(state, code, rng, options);
  report.correction = correct(code, report.syndromes.x_syndrome, report.syndromes.z_syndrome);
  if (!report.correction) return report;
  apply_pauli(state, embed(*report.correction, data, state.num_qubits()));
  report.corrected = true;
  return report;
}

}  // namespace qlab
