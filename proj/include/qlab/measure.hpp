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

#include <vector>

#include "qlab/matrix.hpp"
#include "qlab/pauli.hpp"
#include "qlab/rng.hpp"
#include "qlab/statevec.hpp"

namespace qlab {

/// One branch of a measurement: outcome bits, Born probability, normalized
/// post-measurement state.
struct Outcome {
  F2Vector bits;
  double probability;
  StateVector post;
};

struct MeasurementRecord {
  std::vector<int> wires;
  F2Vector outcome;
  double probability;
};

/// Born distribution for a Z-basis measurement of `wires` (any subset, any
/// order; outcome bit j belongs to wires[j]).  Branches with projected
/// amplitude < kAmplitudePrune are dropped.  Probabilities sum to 1 within
/// 1e-10; input must be normalized.
std::vector<Outcome> outcome_distribution(const StateVector& state, const std::vector<int>& wires);

/// Samples one branch; the state is replaced by the post-measurement state.
MeasurementRecord measure(StateVector& state, const std::vector<int>& wires, Rng& rng);

/// Measurement in the |+>/|-> basis: conjugates the wires by H, measures,
/// conjugates back.  Outcome bit 1 = |->.
MeasurementRecord measure_x_basis(StateVector& state, const std::vector<int>& wires, Rng& rng);

/// Distribution of a two-outcome observable measurement for an involution U
/// (U.U = I): branch 0 is (I+U)/2 applied to the state, branch 1 is
/// (I-U)/2, each renormalized.  Outcome bit 1 means eigenvalue -1.
std::vector<Outcome> stabiliser_distribution(const StateVector& state, const PauliOperator& u);
std::vector<Outcome> stabiliser_distribution(const StateVector& state, const CMatrix& u);

MeasurementRecord measure_stabiliser(StateVector& state, const PauliOperator& u, Rng& rng);
MeasurementRecord measure_stabiliser(StateVector& state, const CMatrix& u, Rng& rng);

}  // namespace qlab
