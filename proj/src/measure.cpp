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

#include "qlab/measure.hpp"

#include <algorithm>
#include <cmath>

#include "qlab/errors.hpp"

namespace qlab {

std::size_t sample_index(const std::vector<double>& probabilities, Rng& rng) {
  if (probabilities.empty()) throw DimensionError("sample_index: empty distribution");
  const double u = rng.next_double();
  double cum = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    cum += probabilities[i];
    if (probabilities[i] > 0.0) last_positive = i;
    if (u < cum) return i;
  }
  return last_positive;  // u fell into float slack at the top
}

namespace {

void check_normalized(const StateVector& state) {
  if (std::abs(state.norm() - 1.0) > 1e-9)
    throw NumericError("state is not normalized (norm " + std::to_string(state.norm()) + ")");
}

void check_wires(const StateVector& state, const std::vector<int>& wires) {
  if (wires.empty()) throw DimensionError("measurement needs at least one wire");
  std::vector<int> sorted = wires;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DimensionError("measurement wires must be distinct");
  for (int w : wires) (void)state.wire_mask(w);  // range check
}

}  // namespace

std::vector<Outcome> outcome_distribution(const StateVector& state, const std::vector<int>& wires) {
  check_normalized(state);
  check_wires(state, wires);
  const int k = static_cast<int>(wires.size());
  std::vector<std::uint64_t> masks;
  for (int w : wires) masks.push_back(state.wire_mask(w));

  auto key_of = [&](std::uint64_t index) {
    std::uint64_t key = 0;
    for (int j = 0; j < k; ++j)
      if (index & masks[static_cast<std::size_t>(j)]) key |= 1ULL << (k - 1 - j);
    return key;
  };

  std::vector<double> probs(1ULL << k, 0.0);
  for (std::uint64_t i = 0; i < state.size(); ++i) probs[key_of(i)] += std::norm(state.amp(i));

  std::vector<Outcome> out;
  for (std::uint64_t key = 0; key < probs.size(); ++key) {
    const double p = probs[key];
    if (std::sqrt(p) < kAmplitudePrune) continue;
    StateVector post(state.num_qubits());
    post.amp(0) = 0.0;
    const double scale = 1.0 / std::sqrt(p);
    for (std::uint64_t i = 0; i < state.size(); ++i)
      if (key_of(i) == key) post.amp(i) = state.amp(i) * scale;
    out.push_back(Outcome{F2Vector::from_index(k, key), p, std::move(post)});
  }
  return out;
}

MeasurementRecord measure(StateVector& state, const std::vector<int>& wires, Rng& rng) {
  auto outcomes = outcome_distribution(state, wires);
  std::vector<double> probs;
  for (const auto& o : outcomes) probs.push_back(o.probability);
  const std::size_t pick = sample_index(probs, rng);
  state = outcomes[pick].post;
  return MeasurementRecord{wires, outcomes[pick].bits, outcomes[pick].probability};
}

MeasurementRecord measure_x_basis(StateVector& state, const std::vector<int>& wires, Rng& rng) {
  for (int w : wires) state.apply(Gate::h(w));
  MeasurementRecord rec = measure(state, wires, rng);
  for (int w : wires) state.apply(Gate::h(w));
  return rec;
}

namespace {

std::vector<Outcome> projector_branches(const StateVector& state, const StateVector& u_state) {
  std::vector<Outcome> out;
  for (int bit = 0; bit <= 1; ++bit) {
    StateVector branch(state.num_qubits());
    branch.amp(0) = 0.0;
    const double sign = bit == 0 ? 1.0 : -1.0;
    for (std::uint64_t i = 0; i < state.size(); ++i)
      branch.amp(i) = 0.5 * (state.amp(i) + sign * u_state.amp(i));
    const double n = branch.norm();
    if (n < kAmplitudePrune) continue;
    branch.scale(1.0 / n);
    F2Vector bits(1);
    bits.set(1, bit == 1);
    out.push_back(Outcome{bits, n * n, std::move(branch)});
  }
  return out;
}

}  // namespace

std::vector<Outcome> stabiliser_distribution(const StateVector& state, const PauliOperator& u) {
  check_normalized(state);
  if (!u.is_involution())
    throw NumericError("observable " + u.str() + " is not an involution");
  return projector_branches(state, pauli_applied(state, u));
}

std::vector<Outcome> stabiliser_distribution(const StateVector& state, const CMatrix& u) {
  check_normalized(state);
  if (u.dim() != state.size()) throw DimensionError("observable dimension != state dimension");
  if ((u * u).max_abs_diff(CMatrix::identity(u.dim())) > kUnitaryTol)
    throw NumericError("observable is not an involution within tolerance");
  StateVector u_state(state.num_qubits());
  u_state.amp(0) = 0.0;
  for (std::uint64_t r = 0; r < state.size(); ++r) {
    Complex acc = 0.0;
    for (std::uint64_t c = 0; c < state.size(); ++c) acc += u.at(r, c) * state.amp(c);
    u_state.amp(r) = acc;
  }
  return projector_branches(state, u_state);
}

namespace {

MeasurementRecord sample_stabiliser(StateVector& state, std::vector<Outcome> outcomes, Rng& rng) {
  std::vector<double> probs;
  for (const auto& o : outcomes) probs.push_back(o.probability);
  const std::size_t pick = sample_index(probs, rng);
  state = outcomes[pick].post;
  return MeasurementRecord{{}, outcomes[pick].bits, outcomes[pick].probability};
}

}  // namespace

MeasurementRecord measure_stabiliser(StateVector& state, const PauliOperator& u, Rng& rng) {
  return sample_stabiliser(state, stabiliser_distribution(state, u), rng);
}

MeasurementRecord measure_stabiliser(StateVector& state, const CMatrix& u, Rng& rng) {
  return sample_stabiliser(state, stabiliser_distribution(state, u), rng);
}

}  // namespace qlab
