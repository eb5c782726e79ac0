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

#include "qlab/pauli.hpp"

#include <bit>
#include <cctype>
#include <cmath>

#include "qlab/circuit.hpp"
#include "qlab/errors.hpp"

namespace qlab {

PauliOperator::PauliOperator(int num_qubits) : n_(num_qubits), x_(num_qubits), z_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 64) throw DimensionError("PauliOperator needs 1..64 qubits");
}

PauliOperator PauliOperator::identity(int num_qubits) { return PauliOperator(num_qubits); }

PauliOperator PauliOperator::x_on(int num_qubits, int q) {
  PauliOperator p(num_qubits);
  p.x_.set(q, true);
  return p;
}

PauliOperator PauliOperator::z_on(int num_qubits, int q) {
  PauliOperator p(num_qubits);
  p.z_.set(q, true);
  return p;
}

PauliOperator PauliOperator::y_on(int num_qubits, int q) {
  // Y = i X.Z
  PauliOperator p(num_qubits);
  p.x_.set(q, true);
  p.z_.set(q, true);
  p.k_ = 1;
  return p;
}

PauliOperator PauliOperator::from_x_mask(const F2Vector& u) {
  PauliOperator p(u.length());
  p.x_ = u;
  return p;
}

PauliOperator PauliOperator::from_z_mask(const F2Vector& u) {
  PauliOperator p(u.length());
  p.z_ = u;
  return p;
}

PauliOperator PauliOperator::from_masks(const F2Vector& x, const F2Vector& z, int phase_exponent) {
  if (x.length() != z.length()) throw DimensionError("from_masks: length mismatch");
  PauliOperator p(x.length());
  p.x_ = x;
  p.z_ = z;
  p.k_ = ((phase_exponent % 4) + 4) % 4;
  return p;
}

Complex PauliOperator::phase() const {
  static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[k_];
}

bool PauliOperator::is_identity() const { return x_.is_zero() && z_.is_zero() && k_ == 0; }

char PauliOperator::letter(int q) const {
  bool x = x_.get(q), z = z_.get(q);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionError("Pauli product: qubit count mismatch");
  // Moving Z^b past X^c costs (-1) per overlapping site.
  int crossings = std::popcount(a.z_bits().word() & b.x_bits().word());
  return PauliOperator::from_masks(a.x_bits() + b.x_bits(), a.z_bits() + b.z_bits(),
                                   a.phase_exponent() + b.phase_exponent() + 2 * crossings);
}

PauliOperator& PauliOperator::multiply_right(const PauliOperator& other) {
  *this = multiply(*this, other);
  return *this;
}

bool PauliOperator::commutes(const PauliOperator& other) const {
  int form = (std::popcount(x_.word() & other.z_bits().word()) +
              std::popcount(z_.word() & other.x_bits().word())) &
             1;
  return form == 0;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) { return a.commutes(b); }

bool PauliOperator::is_involution() const { return multiply(*this, *this).is_identity(); }

namespace {

const char* phase_prefix(int k) {
  switch (k & 3) {
    case 0: return "+";
    case 1: return "+i";
    case 2: return "-";
    default: return "-i";
  }
}

}  // namespace

std::string PauliOperator::str() const {
  int display_k = k_;
  std::string body;
  for (int q = 1; q <= n_; ++q) {
    char l = letter(q);
    if (l == 'I') continue;
    if (l == 'Y') display_k += 3;  // stored X.Z = -i Y
    body += l;
    body += std::to_string(q);
  }
  if (body.empty()) body = "I";
  return std::string(phase_prefix(display_k)) + body;
}

std::string PauliOperator::compact_str() const {
  std::string s = str();
  if (s.size() > 1 && s[0] == '+' && s[1] != 'i') return s.substr(1);
  return s;
}

std::string PauliOperator::mask_str() const {
  std::string out;
  if (k_ != 0) out = phase_prefix(k_);
  if (!x_.is_zero()) out += "X^" + x_.str();
  if (!z_.is_zero()) out += "Z^" + z_.str();
  if (x_.is_zero() && z_.is_zero()) out += "I";
  return out;
}

PauliOperator PauliOperator::parse(const std::string& text, int num_qubits) {
  PauliOperator result(num_qubits);
  std::size_t i = 0;
  auto skip_sep = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
  };
  skip_sep();
  // Optional phase prefix: +, -, i, -i, +i.
  int sign_k = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') sign_k = 2;
    ++i;
  }
  if (i < text.size() && text[i] == 'i') {
    sign_k += 1;
    ++i;
  }
  result.k_ = sign_k & 3;

  skip_sep();
  bool saw_token = false;
  while (i < text.size()) {
    char l = text[i];
    if (l != 'X' && l != 'Y' && l != 'Z' && l != 'I')
      throw DimensionError("cannot parse Pauli text '" + text + "' at position " + std::to_string(i));
    ++i;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t start = i;
      while (i < text.size() && (text[i] == '0' || text[i] == '1')) ++i;
      F2Vector mask = F2Vector::from_string(text.substr(start, i - start));
      if (mask.length() != num_qubits)
        throw DimensionError("Pauli mask length != qubit count in '" + text + "'");
      if (l == 'X')
        result.multiply_right(from_x_mask(mask));
      else if (l == 'Z')
        result.multiply_right(from_z_mask(mask));
      else if (l == 'Y')
        for (int q : mask.support()) result.multiply_right(y_on(num_qubits, q));
      // I^mask is the identity
    } else if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      int q = std::stoi(text.substr(start, i - start));
      if (q < 1 || q > num_qubits)
        throw DimensionError("Pauli wire " + std::to_string(q) + " out of range in '" + text + "'");
      if (l == 'X')
        result.multiply_right(x_on(num_qubits, q));
      else if (l == 'Y')
        result.multiply_right(y_on(num_qubits, q));
      else if (l == 'Z')
        result.multiply_right(z_on(num_qubits, q));
      else
        throw DimensionError("identity takes no wire index in '" + text + "'");
    } else if (l == 'I') {
      // bare identity token
    } else {
      throw DimensionError("Pauli letter without wire in '" + text + "'");
    }
    saw_token = true;
    skip_sep();
  }
  if (!saw_token) throw DimensionError("empty Pauli text '" + text + "'");
  return result;
}

CMatrix PauliOperator::dense() const {
  if (n_ > 10) throw ResourceError("dense Pauli matrices capped at 10 qubits");
  const std::uint64_t dim = 1ULL << n_;
  CMatrix m(dim);
  for (std::uint64_t v = 0; v < dim; ++v) {
    int sign = std::popcount(z_.word() & v) & 1;
    Complex entry = phase() * (sign ? -1.0 : 1.0);
    m.at(v ^ x_.word(), v) = entry;
  }
  return m;
}

namespace {

// Image of the generator X_q / Z_q under conjugation by g, with exact phase.
PauliOperator image_x(const Gate& g, int q, int n) {
  switch (g.kind) {
    case Gate::Kind::H:
      if (q == g.wires[0]) return PauliOperator::z_on(n, q);
      break;
    case Gate::Kind::S:
      if (q == g.wires[0]) return PauliOperator::y_on(n, q);
      break;
    case Gate::Kind::X:
      break;
    case Gate::Kind::Y:
    case Gate::Kind::Z:
      if (q == g.wires[0])
        return PauliOperator::from_masks(F2Vector::from_support(n, {q}), F2Vector(n), 2);
      break;
    case Gate::Kind::Cnot:
      if (q == g.wires[0])
        return multiply(PauliOperator::x_on(n, g.wires[0]), PauliOperator::x_on(n, g.wires[1]));
      break;
    case Gate::Kind::Swap:
      if (q == g.wires[0]) return PauliOperator::x_on(n, g.wires[1]);
      if (q == g.wires[1]) return PauliOperator::x_on(n, g.wires[0]);
      break;
    default:
      throw UnsupportedGateError(0, "gate '" + g.name() + "' is outside the Clifford set");
  }
  return PauliOperator::x_on(n, q);
}

PauliOperator image_z(const Gate& g, int q, int n) {
  switch (g.kind) {
    case Gate::Kind::H:
      if (q == g.wires[0]) return PauliOperator::x_on(n, q);
      break;
    case Gate::Kind::S:
    case Gate::Kind::Z:
      break;
    case Gate::Kind::X:
    case Gate::Kind::Y:
      if (q == g.wires[0])
        return PauliOperator::from_masks(F2Vector(n), F2Vector::from_support(n, {q}), 2);
      break;
    case Gate::Kind::Cnot:
      if (q == g.wires[1])
        return multiply(PauliOperator::z_on(n, g.wires[0]), PauliOperator::z_on(n, g.wires[1]));
      break;
    case Gate::Kind::Swap:
      if (q == g.wires[0]) return PauliOperator::z_on(n, g.wires[1]);
      if (q == g.wires[1]) return PauliOperator::z_on(n, g.wires[0]);
      break;
    default:
      throw UnsupportedGateError(0, "gate '" + g.name() + "' is outside the Clifford set");
  }
  return PauliOperator::z_on(n, q);
}

bool clifford_kind(Gate::Kind k) {
  switch (k) {
    case Gate::Kind::X:
    case Gate::Kind::Y:
    case Gate::Kind::Z:
    case Gate::Kind::H:
    case Gate::Kind::S:
    case Gate::Kind::Cnot:
    case Gate::Kind::Swap:
      return true;
    default:
      return false;
  }
}

}  // namespace

PauliOperator conjugate_through(const Gate& g, const PauliOperator& p) {
  if (!clifford_kind(g.kind))
    throw UnsupportedGateError(0, "gate '" + g.name() + "' is outside the Clifford set");
  const int n = p.num_qubits();
  // g p g+ extended multiplicatively over the canonical form
  // i^k (prod X^x) (prod Z^z), qubits in ascending order.
  PauliOperator result = PauliOperator::from_masks(F2Vector(n), F2Vector(n), p.phase_exponent());
  for (int q = 1; q <= n; ++q)
    if (p.x_bits().get(q)) result.multiply_right(image_x(g, q, n));
  for (int q = 1; q <= n; ++q)
    if (p.z_bits().get(q)) result.multiply_right(image_z(g, q, n));
  return result;
}

PauliOperator propagate(const PauliOperator& p, const Circuit& circuit, std::size_t first_step) {
  if (p.num_qubits() != circuit.num_qubits)
    throw DimensionError("propagate: Pauli width != circuit width");
  PauliOperator current = p;
  // Crossing another Pauli only toggles the sign.
  auto cross = [&](const PauliOperator& other) {
    if (!current.commutes(other))
      current = PauliOperator::from_masks(current.x_bits(), current.z_bits(),
                                          current.phase_exponent() + 2);
  };
  for (std::size_t step = first_step; step < circuit.steps.size(); ++step) {
    const Instruction& inst = circuit.steps[step];
    if (const auto* ls = std::get_if<LabelStep>(&inst)) {
      // Labeled faults fire here, matching execution order.
      for (const auto& other : circuit.steps)
        if (const auto* fs = std::get_if<FaultStep>(&other))
          if (fs->label == ls->name) cross(fs->fault);
      continue;
    }
    if (std::holds_alternative<MeasureStep>(inst)) break;  // equivalent fault just before readout
    if (const auto* fs = std::get_if<FaultStep>(&inst)) {
      if (fs->label.empty()) cross(fs->fault);
      continue;
    }
    if (const auto* is = std::get_if<InitStep>(&inst)) {
      switch (is->state) {
        case '0': break;
        case '1': current = conjugate_through(Gate::x(is->wire), current); break;
        case '+': current = conjugate_through(Gate::h(is->wire), current); break;
        case '-':
          current = conjugate_through(Gate::x(is->wire), current);
          current = conjugate_through(Gate::h(is->wire), current);
          break;
        default: throw DimensionError("unknown init state");
      }
      continue;
    }
    const Gate& g = std::get<GateStep>(inst).gate;
    if (!clifford_kind(g.kind))
      throw UnsupportedGateError(step, "gate '" + g.name() + "' is outside the Clifford set");
    current = conjugate_through(g, current);
  }
  return current;
}

PauliOperator restrict_to(const PauliOperator& p, const std::vector<int>& wires) {
  PauliOperator out(static_cast<int>(wires.size()));
  F2Vector x(out.num_qubits()), z(out.num_qubits());
  for (std::size_t j = 0; j < wires.size(); ++j) {
    x.set(static_cast<int>(j) + 1, p.x_bits().get(wires[j]));
    z.set(static_cast<int>(j) + 1, p.z_bits().get(wires[j]));
  }
  return PauliOperator::from_masks(x, z, p.phase_exponent());
}

PauliOperator embed(const PauliOperator& p, const std::vector<int>& wires, int width) {
  if (wires.size() != static_cast<std::size_t>(p.num_qubits()))
    throw DimensionError("embed: wire list size != Pauli width");
  F2Vector x(width), z(width);
  for (std::size_t j = 0; j < wires.size(); ++j) {
    int q = static_cast<int>(j) + 1;
    if (p.x_bits().get(q)) x.set(wires[j], true);
    if (p.z_bits().get(q)) z.set(wires[j], true);
  }
  return PauliOperator::from_masks(x, z, p.phase_exponent());
}

void apply_pauli(StateVector& state, const PauliOperator& p) {
  if (p.num_qubits() != state.num_qubits()) throw DimensionError("apply_pauli: qubit count mismatch");
  const std::uint64_t xm = p.x_bits().word();
  const std::uint64_t zm = p.z_bits().word();
  const Complex ph = p.phase();
  const std::uint64_t size = state.size();
  auto branch_phase = [&](std::uint64_t v) {
    return (std::popcount(zm & v) & 1) ? -ph : ph;
  };
  if (xm == 0) {
    for (std::uint64_t v = 0; v < size; ++v) state.amp(v) *= branch_phase(v);
    return;
  }
  const std::uint64_t pivot = 1ULL << (63 - std::countl_zero(xm));
  for (std::uint64_t v = 0; v < size; ++v) {
    if (v & pivot) continue;
    const std::uint64_t w = v ^ xm;
    Complex av = state.amp(v), aw = state.amp(w);
    state.amp(w) = branch_phase(v) * av;
    state.amp(v) = branch_phase(w) * aw;
  }
}

StateVector pauli_applied(StateVector state, const PauliOperator& p) {
  apply_pauli(state, p);
  return state;
}

}  // namespace qlab
