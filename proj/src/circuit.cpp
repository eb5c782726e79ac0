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

#include "qlab/circuit.hpp"

#include <algorithm>
#include <set>

#include "qlab/errors.hpp"

namespace qlab {

Circuit& Circuit::init(int wire, char state) {
  steps.push_back(InitStep{wire, state});
  return *this;
}

Circuit& Circuit::gate(const Gate& g) {
  steps.push_back(GateStep{g});
  return *this;
}

Circuit& Circuit::fault(const PauliOperator& p, const std::string& label) {
  steps.push_back(FaultStep{p, label});
  return *this;
}

Circuit& Circuit::measure(const std::vector<int>& wires, char basis) {
  steps.push_back(MeasureStep{wires, basis});
  return *this;
}

Circuit& Circuit::label(const std::string& name) {
  steps.push_back(LabelStep{name});
  return *this;
}

void Circuit::validate() const {
  if (num_qubits < 1) throw DimensionError("circuit needs at least one qubit");
  auto check_wire = [&](int w) {
    if (w < 1 || w > num_qubits)
      throw DimensionError("wire " + std::to_string(w) + " outside 1.." + std::to_string(num_qubits));
  };
  std::set<std::string> labels;
  for (const auto& inst : steps) {
    if (const auto* l = std::get_if<LabelStep>(&inst)) {
      if (!labels.insert(l->name).second) throw DimensionError("duplicate label '" + l->name + "'");
    }
  }
  for (const auto& inst : steps) {
    if (const auto* is = std::get_if<InitStep>(&inst)) {
      check_wire(is->wire);
      if (std::string("01+-").find(is->state) == std::string::npos)
        throw DimensionError("unknown init state");
    } else if (const auto* gs = std::get_if<GateStep>(&inst)) {
      for (int w : gs->gate.wires) check_wire(w);
      std::vector<int> ws = gs->gate.wires;
      std::sort(ws.begin(), ws.end());
      if (std::adjacent_find(ws.begin(), ws.end()) != ws.end())
        throw DimensionError("gate wires must be distinct");
    } else if (const auto* fs = std::get_if<FaultStep>(&inst)) {
      if (fs->fault.num_qubits() != num_qubits)
        throw DimensionError("fault operator width != circuit width");
      if (!fs->label.empty() && labels.find(fs->label) == labels.end())
        throw DimensionError("fault references unknown label '" + fs->label + "'");
    } else if (const auto* ms = std::get_if<MeasureStep>(&inst)) {
      if (ms->wires.empty()) throw DimensionError("measurement needs at least one wire");
      for (int w : ms->wires) check_wire(w);
      std::vector<int> ws = ms->wires;
      std::sort(ws.begin(), ws.end());
      if (std::adjacent_find(ws.begin(), ws.end()) != ws.end())
        throw DimensionError("measurement wires must be distinct");
      if (ms->basis != 'Z' && ms->basis != 'X') throw DimensionError("unknown measurement basis");
    }
  }
}

std::size_t Circuit::gate_count(Gate::Kind kind) const {
  std::size_t count = 0;
  for (const auto& inst : steps)
    if (const auto* gs = std::get_if<GateStep>(&inst))
      if (gs->gate.kind == kind) ++count;
  return count;
}

std::string ExecutionResult::bit_string() const {
  std::string bits;
  for (const auto& m : measurements) bits += m.outcome.str();
  return bits;
}

ExecutionResult execute(const Circuit& circuit, Rng& rng) {
  return execute_on(circuit, StateVector(circuit.num_qubits), rng);
}

ExecutionResult execute_on(const Circuit& circuit, StateVector state, Rng& rng) {
  circuit.validate();
  if (state.num_qubits() != circuit.num_qubits)
    throw DimensionError("initial state width != circuit width");
  ExecutionResult result{std::move(state), {}};

  auto fire_fault = [&](const FaultStep& f) { apply_pauli(result.state, f.fault); };

  for (const auto& inst : circuit.steps) {
    if (const auto* is = std::get_if<InitStep>(&inst)) {
      switch (is->state) {
        case '0': break;
        case '1': result.state.apply(Gate::x(is->wire)); break;
        case '+': result.state.apply(Gate::h(is->wire)); break;
        case '-':
          result.state.apply(Gate::x(is->wire));
          result.state.apply(Gate::h(is->wire));
          break;
      }
    } else if (const auto* gs = std::get_if<GateStep>(&inst)) {
      result.state.apply(gs->gate);
    } else if (const auto* fs = std::get_if<FaultStep>(&inst)) {
      if (fs->label.empty()) fire_fault(*fs);
    } else if (const auto* ms = std::get_if<MeasureStep>(&inst)) {
      MeasurementRecord rec = ms->basis == 'X' ? measure_x_basis(result.state, ms->wires, rng)
                                               : measure(result.state, ms->wires, rng);
      result.measurements.push_back(ShotMeasurement{ms->wires, ms->basis, rec.outcome, rec.probability});
    } else if (const auto* ls = std::get_if<LabelStep>(&inst)) {
      for (const auto& other : circuit.steps)
        if (const auto* fs2 = std::get_if<FaultStep>(&other))
          if (fs2->label == ls->name) fire_fault(*fs2);
    }
  }
  return result;
}

}  // namespace qlab
