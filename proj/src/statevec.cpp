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

#include "qlab/statevec.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>

#include "qlab/errors.hpp"
#include "qlab/rng.hpp"

namespace qlab {

namespace {

void check_distinct(const std::vector<int>& wires, const char* what) {
  std::vector<int> sorted = wires;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DimensionError(std::string(what) + ": wires must be distinct");
}

}  // namespace

BooleanFunction::BooleanFunction(int arity, std::vector<std::uint8_t> table)
    : arity_(arity), table_(std::move(table)) {
  if (arity < 0 || arity > 20) throw DimensionError("BooleanFunction arity must be in [0, 20]");
  if (table_.size() != (1ULL << arity)) throw DimensionError("truth table size != 2^arity");
  for (auto v : table_)
    if (v > 1) throw DimensionError("truth table entries must be 0/1");
}

BooleanFunction BooleanFunction::constant(int arity, bool value) {
  return BooleanFunction(arity, std::vector<std::uint8_t>(1ULL << arity, value ? 1 : 0));
}

BooleanFunction BooleanFunction::dot_mask(const F2Vector& w) {
  int arity = w.length();
  std::vector<std::uint8_t> table(1ULL << arity);
  for (std::uint64_t v = 0; v < table.size(); ++v)
    table[v] = static_cast<std::uint8_t>(std::popcount(v & w.word()) & 1);
  return BooleanFunction(arity, std::move(table));
}

BooleanFunction BooleanFunction::balanced_sample(int arity, std::uint64_t seed) {
  if (arity < 1) throw DimensionError("balanced function needs arity >= 1");
  std::vector<std::uint8_t> table(1ULL << arity, 0);
  std::fill(table.begin(), table.begin() + static_cast<std::ptrdiff_t>(table.size() / 2), 1);
  Rng rng(seed);
  for (std::size_t i = table.size() - 1; i > 0; --i)
    std::swap(table[i], table[rng.next_below(i + 1)]);
  return BooleanFunction(arity, std::move(table));
}

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::vector<std::uint8_t> bits_from_hex(const std::string& text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size() * 4);
  for (char c : text) {
    int v = hex_value(c);
    if (v < 0) throw DimensionError("invalid hex digit in truth table");
    for (int b = 3; b >= 0; --b) bits.push_back(static_cast<std::uint8_t>((v >> b) & 1));
  }
  return bits;
}

bool all_binary(const std::string& text) {
  return !text.empty() &&
         std::all_of(text.begin(), text.end(), [](char c) { return c == '0' || c == '1'; });
}

}  // namespace

BooleanFunction BooleanFunction::from_text(int arity, const std::string& text) {
  std::uint64_t need = 1ULL << arity;
  if (all_binary(text) && text.size() == need) {
    std::vector<std::uint8_t> table(need);
    for (std::uint64_t i = 0; i < need; ++i) table[i] = text[i] == '1';
    return BooleanFunction(arity, std::move(table));
  }
  auto bits = bits_from_hex(text);
  if (bits.size() != need)
    throw DimensionError("truth table text encodes " + std::to_string(bits.size()) +
                         " entries, expected " + std::to_string(need));
  return BooleanFunction(arity, std::move(bits));
}

BooleanFunction BooleanFunction::from_text_auto(const std::string& text, std::optional<int> arity) {
  if (arity) return from_text(*arity, text);
  std::size_t n_entries = all_binary(text) ? text.size() : text.size() * 4;
  if (n_entries == 0 || (n_entries & (n_entries - 1)) != 0)
    throw DimensionError("cannot infer arity: table length is not a power of two");
  int k = std::countr_zero(n_entries);
  return from_text(k, text);
}

int BooleanFunction::ones() const {
  int total = 0;
  for (auto v : table_) total += v;
  return total;
}

bool BooleanFunction::is_constant() const {
  int k = ones();
  return k == 0 || k == static_cast<int>(table_.size());
}

bool BooleanFunction::is_balanced() const { return ones() * 2 == static_cast<int>(table_.size()); }

std::string BooleanFunction::to_bit_string() const {
  std::string s(table_.size(), '0');
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i]) s[i] = '1';
  return s;
}

std::string BooleanFunction::to_text() const {
  if (arity_ < 2) return to_bit_string();
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < table_.size(); i += 4) {
    int v = (table_[i] << 3) | (table_[i + 1] << 2) | (table_[i + 2] << 1) | table_[i + 3];
    out += digits[v];
  }
  return out;
}

Gate Gate::x(int q) { return Gate{Kind::X, {q}, {}, {}}; }
Gate Gate::y(int q) { return Gate{Kind::Y, {q}, {}, {}}; }
Gate Gate::z(int q) { return Gate{Kind::Z, {q}, {}, {}}; }
Gate Gate::h(int q) { return Gate{Kind::H, {q}, {}, {}}; }
Gate Gate::s(int q) { return Gate{Kind::S, {q}, {}, {}}; }

Gate Gate::cnot(int control, int target) {
  Gate g{Kind::Cnot, {control, target}, {}, {}};
  check_distinct(g.wires, "cnot");
  return g;
}

Gate Gate::swap(int a, int b) {
  Gate g{Kind::Swap, {a, b}, {}, {}};
  check_distinct(g.wires, "swap");
  return g;
}

Gate Gate::controlled_boolean(const BooleanFunction& f, const std::vector<int>& inputs, int output) {
  if (static_cast<int>(inputs.size()) != f.arity())
    throw DimensionError("controlled_boolean: input count != arity");
  Gate g{Kind::ControlledBoolean, {output}, f, {}};
  g.wires.insert(g.wires.end(), inputs.begin(), inputs.end());
  check_distinct(g.wires, "controlled_boolean");
  return g;
}

Gate Gate::custom_unitary(const CMatrix& u, const std::vector<int>& wires) {
  if (u.dim() != (1ULL << wires.size())) throw DimensionError("custom_unitary: matrix size != 2^wires");
  if (!u.is_unitary(kUnitaryTol)) throw NumericError("custom_unitary: payload is not unitary");
  Gate g{Kind::CustomUnitary, wires, {}, u};
  check_distinct(g.wires, "custom_unitary");
  return g;
}

Gate Gate::controlled_unitary(const CMatrix& u, const std::vector<int>& wires, int control) {
  if (u.dim() != (1ULL << wires.size()))
    throw DimensionError("controlled_unitary: matrix size != 2^wires");
  if (!u.is_unitary(kUnitaryTol)) throw NumericError("controlled_unitary: payload is not unitary");
  Gate g{Kind::ControlledUnitary, {control}, {}, u};
  g.wires.insert(g.wires.end(), wires.begin(), wires.end());
  check_distinct(g.wires, "controlled_unitary");
  return g;
}

std::string Gate::name() const {
  switch (kind) {
    case Kind::X: return "x";
    case Kind::Y: return "y";
    case Kind::Z: return "z";
    case Kind::H: return "h";
    case Kind::S: return "s";
    case Kind::Cnot: return "cnot";
    case Kind::Swap: return "swap";
    case Kind::ControlledBoolean: return "uf";
    case Kind::CustomUnitary: return "unitary";
    case Kind::ControlledUnitary: return "controlled-unitary";
  }
  return "?";
}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw DimensionError("state needs at least one qubit");
  if (num_qubits > kMaxQubits)
    throw ResourceError("dense simulation capped at " + std::to_string(kMaxQubits) + " qubits");
  amps_.assign(1ULL << num_qubits, Complex(0.0));
  amps_[0] = 1.0;
}

StateVector StateVector::basis(int num_qubits, const F2Vector& bits) {
  if (bits.length() != num_qubits) throw DimensionError("basis: bit count != qubit count");
  StateVector s(num_qubits);
  s.amps_[0] = 0.0;
  s.amps_[bits.to_index()] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(int num_qubits, std::vector<Complex> amps) {
  StateVector s(num_qubits);
  if (amps.size() != s.amps_.size()) throw DimensionError("from_amplitudes: size != 2^n");
  s.amps_ = std::move(amps);
  return s;
}

Complex StateVector::amplitude(const F2Vector& bits) const {
  if (bits.length() != num_qubits_) throw DimensionError("amplitude: bit count != qubit count");
  return amps_[bits.to_index()];
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

void StateVector::normalize() {
  double n = norm();
  if (n < kAmplitudePrune) throw NumericError("cannot normalize a numerically zero state");
  scale(1.0 / n);
}

void StateVector::scale(Complex c) {
  for (auto& a : amps_) a *= c;
}

std::uint64_t StateVector::wire_mask(int q) const {
  if (q < 1 || q > num_qubits_) throw DimensionError("wire index out of range");
  return 1ULL << (num_qubits_ - q);
}

void StateVector::apply(const Gate& g) {
  const std::uint64_t size = amps_.size();
  switch (g.kind) {
    case Gate::Kind::X: {
      const std::uint64_t m = wire_mask(g.wires[0]);
      for (std::uint64_t i = 0; i < size; ++i)
        if (!(i & m)) std::swap(amps_[i], amps_[i | m]);
      break;
    }
    case Gate::Kind::Y: {
      const std::uint64_t m = wire_mask(g.wires[0]);
      const Complex im(0.0, 1.0);
      for (std::uint64_t i = 0; i < size; ++i)
        if (!(i & m)) {
          Complex a0 = amps_[i], a1 = amps_[i | m];
          amps_[i] = -im * a1;
          amps_[i | m] = im * a0;
        }
      break;
    }
    case Gate::Kind::Z: {
      const std::uint64_t m = wire_mask(g.wires[0]);
      for (std::uint64_t i = 0; i < size; ++i)
        if (i & m) amps_[i] = -amps_[i];
      break;
    }
    case Gate::Kind::S: {
      const std::uint64_t m = wire_mask(g.wires[0]);
      const Complex im(0.0, 1.0);
      for (std::uint64_t i = 0; i < size; ++i)
        if (i & m) amps_[i] *= im;
      break;
    }
    case Gate::Kind::H: {
      const std::uint64_t m = wire_mask(g.wires[0]);
      const double s = 1.0 / std::sqrt(2.0);
      for (std::uint64_t i = 0; i < size; ++i)
        if (!(i & m)) {
          Complex a0 = amps_[i], a1 = amps_[i | m];
          amps_[i] = s * (a0 + a1);
          amps_[i | m] = s * (a0 - a1);
        }
      break;
    }
    case Gate::Kind::Cnot: {
      const std::uint64_t cm = wire_mask(g.wires[0]), tm = wire_mask(g.wires[1]);
      for (std::uint64_t i = 0; i < size; ++i)
        if ((i & cm) && !(i & tm)) std::swap(amps_[i], amps_[i | tm]);
      break;
    }
    case Gate::Kind::Swap: {
      const std::uint64_t am = wire_mask(g.wires[0]), bm = wire_mask(g.wires[1]);
      for (std::uint64_t i = 0; i < size; ++i)
        if ((i & am) && !(i & bm)) std::swap(amps_[i], amps_[i ^ am ^ bm]);
      break;
    }
    case Gate::Kind::ControlledBoolean: {
      const std::uint64_t om = wire_mask(g.wires[0]);
      const int arity = g.boolean.arity();
      std::vector<std::uint64_t> in_masks;
      for (int j = 1; j <= arity; ++j) in_masks.push_back(wire_mask(g.wires[static_cast<std::size_t>(j)]));
      for (std::uint64_t i = 0; i < size; ++i) {
        if (i & om) continue;
        std::uint64_t v = 0;
        for (int j = 0; j < arity; ++j)
          if (i & in_masks[static_cast<std::size_t>(j)]) v |= 1ULL << (arity - 1 - j);
        if (g.boolean.eval(v)) std::swap(amps_[i], amps_[i | om]);
      }
      break;
    }
    case Gate::Kind::CustomUnitary:
    case Gate::Kind::ControlledUnitary: {
      const bool controlled = g.kind == Gate::Kind::ControlledUnitary;
      const std::uint64_t control_mask = controlled ? wire_mask(g.wires[0]) : 0;
      const std::size_t first = controlled ? 1 : 0;
      const std::size_t m = g.wires.size() - first;
      std::vector<std::uint64_t> masks;
      for (std::size_t j = first; j < g.wires.size(); ++j) masks.push_back(wire_mask(g.wires[j]));
      std::uint64_t all = control_mask;
      for (auto mk : masks) all |= mk;
      const std::uint64_t dim = 1ULL << m;
      std::vector<Complex> in(dim), out(dim);
      for (std::uint64_t base = 0; base < size; ++base) {
        if ((base & all) != control_mask) continue;  // wrong control value or not a base index
        for (std::uint64_t j = 0; j < dim; ++j) {
          std::uint64_t idx = base;
          for (std::size_t t = 0; t < m; ++t)
            if ((j >> (m - 1 - t)) & 1u) idx |= masks[t];
          in[j] = amps_[idx];
        }
        for (std::uint64_t r = 0; r < dim; ++r) {
          Complex acc = 0.0;
          for (std::uint64_t c = 0; c < dim; ++c) acc += g.payload.at(r, c) * in[c];
          out[r] = acc;
        }
        for (std::uint64_t j = 0; j < dim; ++j) {
          std::uint64_t idx = base;
          for (std::size_t t = 0; t < m; ++t)
            if ((j >> (m - 1 - t)) & 1u) idx |= masks[t];
          amps_[idx] = out[j];
        }
      }
      break;
    }
  }
}

StateVector apply_gate(StateVector state, const Gate& g) {
  state.apply(g);
  return state;
}

StateVector apply_controlled_boolean(StateVector state, const BooleanFunction& f,
                                     const std::vector<int>& inputs, int output) {
  state.apply(Gate::controlled_boolean(f, inputs, output));
  return state;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionError("inner_product: qubit count mismatch");
  Complex acc = 0.0;
  for (std::uint64_t i = 0; i < a.size(); ++i) acc += std::conj(a.amp(i)) * b.amp(i);
  return acc;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  int n = a.num_qubits() + b.num_qubits();
  if (n > kMaxQubits) throw ResourceError("tensor product exceeds the qubit cap");
  std::vector<Complex> amps(1ULL << n);
  for (std::uint64_t ia = 0; ia < a.size(); ++ia) {
    if (a.amp(ia) == 0.0) continue;
    for (std::uint64_t ib = 0; ib < b.size(); ++ib)
      amps[(ia << b.num_qubits()) | ib] = a.amp(ia) * b.amp(ib);
  }
  return StateVector::from_amplitudes(n, std::move(amps));
}

StateVector drop_qubit(const StateVector& state, int q, bool bit) {
  const int n = state.num_qubits();
  if (n < 2) throw DimensionError("cannot drop the last qubit");
  const std::uint64_t m = state.wire_mask(q);
  const std::uint64_t keep = bit ? m : 0;
  std::vector<Complex> amps(state.size() / 2);
  const int p = n - q;  // bit position of the dropped wire
  const std::uint64_t low = m - 1;
  for (std::uint64_t i = 0; i < state.size(); ++i) {
    if ((i & m) != keep) {
      if (std::abs(state.amp(i)) >= kAmplitudePrune)
        throw NumericError("drop_qubit: wire " + std::to_string(q) + " is not definitely " +
                           (bit ? "1" : "0"));
      continue;
    }
    std::uint64_t j = ((i >> (p + 1)) << p) | (i & low);
    amps[j] = state.amp(i);
  }
  return StateVector::from_amplitudes(n - 1, std::move(amps));
}

double fidelity(const StateVector& a, const StateVector& b) { return std::abs(inner_product(a, b)); }

CMatrix circuit_unitary(int num_qubits, const std::vector<Gate>& gates) {
  const std::uint64_t dim = 1ULL << num_qubits;
  CMatrix u(dim);
  for (std::uint64_t c = 0; c < dim; ++c) {
    StateVector col = StateVector::basis(num_qubits, F2Vector::from_index(num_qubits, c));
    for (const auto& g : gates) col.apply(g);
    for (std::uint64_t r = 0; r < dim; ++r) u.at(r, c) = col.amp(r);
  }
  return u;
}

}  // namespace qlab
