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

#include <string>
#include <variant>
#include <vector>

#include "qlab/measure.hpp"
#include "qlab/pauli.hpp"
#include "qlab/rng.hpp"
#include "qlab/statevec.hpp"

namespace qlab {

/// Prepares wire from |0> into one of '0','1','+','-'.
struct InitStep {
  int wire;
  char state;
};

struct GateStep {
  Gate gate;
};

/// Pauli fault injection.  With an empty label the fault fires at its own
/// position in the instruction list; otherwise it fires immediately after
/// the named label step.
struct FaultStep {
  PauliOperator fault;
  std::string label;
};

struct MeasureStep {
  std::vector<int> wires;
  char basis;  // 'Z' or 'X'
};

/// Named barrier; a position faults can reference.
struct LabelStep {
  std::string name;
};

using Instruction = std::variant<InitStep, GateStep, FaultStep, MeasureStep, LabelStep>;

struct Circuit {
  int num_qubits = 0;
  std::vector<Instruction> steps;

  Circuit() = default;
  explicit Circuit(int n) : num_qubits(n) {}

  Circuit& init(int wire, char state);
  Circuit& gate(const Gate& g);
  Circuit& fault(const PauliOperator& p, const std::string& label = "");
  Circuit& measure(const std::vector<int>& wires, char basis = 'Z');
  Circuit& label(const std::string& name);

  /// Wire ranges, distinct wires per gate, fault labels resolve, labels
  /// unique.  Throws DimensionError on violation.
  void validate() const;

  std::size_t gate_count(Gate::Kind kind) const;
};

/// One executed measurement, in program order.
struct ShotMeasurement {
  std::vector<int> wires;
  char basis;
  F2Vector outcome;
  double probability;
};

struct ExecutionResult {
  StateVector state;
  std::vector<ShotMeasurement> measurements;
  /// All measured bits concatenated in program order.
  std::string bit_string() const;
};

/// Runs the circuit once from |0...0>, sampling measurements with rng.
/// Labeled faults fire after their label; inline faults fire in place.
ExecutionResult execute(const Circuit& circuit, Rng& rng);

/// As above but starting from a caller-supplied state.
ExecutionResult execute_on(const Circuit& circuit, StateVector state, Rng& rng);

}  // namespace qlab
