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

#include "qlab/dsl.hpp"

#include <set>
#include <sstream>

#include "qlab/errors.hpp"

namespace qlab {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string stripped = line.substr(0, line.find('#'));
  std::istringstream in(stripped);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

int parse_wire(const std::string& tok, int n, int line) {
  int w = parse_int(tok, line);
  if (w < 1 || w > n)
    throw ParseError(line, "wire " + std::to_string(w) + " outside 1.." + std::to_string(n));
  return w;
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  Circuit circuit;
  bool declared = false;
  std::set<std::string> labels;
  std::vector<std::pair<std::string, int>> fault_labels;  // label -> declaring line

  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& op = tokens[0];

    if (!declared) {
      if (op != "qubits") throw ParseError(line_no, "program must start with 'qubits N'");
      if (tokens.size() != 2) throw ParseError(line_no, "usage: qubits N");
      int n = parse_int(tokens[1], line_no);
      if (n < 1) throw ParseError(line_no, "qubit count must be positive");
      circuit.num_qubits = n;
      declared = true;
      continue;
    }

    const int n = circuit.num_qubits;
    if (op == "qubits") {
      throw ParseError(line_no, "duplicate 'qubits' declaration");
    } else if (op == "init") {
      if (tokens.size() != 3 || tokens[2].size() != 1 ||
          std::string("01+-").find(tokens[2][0]) == std::string::npos)
        throw ParseError(line_no, "usage: init WIRE 0|1|+|-");
      circuit.init(parse_wire(tokens[1], n, line_no), tokens[2][0]);
    } else if (op == "h" || op == "x" || op == "y" || op == "z" || op == "s") {
      if (tokens.size() != 2) throw ParseError(line_no, "usage: " + op + " WIRE");
      int q = parse_wire(tokens[1], n, line_no);
      if (op == "h") circuit.gate(Gate::h(q));
      else if (op == "x") circuit.gate(Gate::x(q));
      else if (op == "y") circuit.gate(Gate::y(q));
      else if (op == "z") circuit.gate(Gate::z(q));
      else circuit.gate(Gate::s(q));
    } else if (op == "cnot" || op == "swap") {
      if (tokens.size() != 3) throw ParseError(line_no, "usage: " + op + " WIRE WIRE");
      int a = parse_wire(tokens[1], n, line_no);
      int b = parse_wire(tokens[2], n, line_no);
      if (a == b) throw ParseError(line_no, op + " wires must differ");
      circuit.gate(op == "cnot" ? Gate::cnot(a, b) : Gate::swap(a, b));
    } else if (op == "uf") {
      if (tokens.size() < 4) throw ParseError(line_no, "usage: uf OUT IN... table=HEX");
      const std::string& last = tokens.back();
      if (last.rfind("table=", 0) != 0) throw ParseError(line_no, "uf needs a trailing table=...");
      int output = parse_wire(tokens[1], n, line_no);
      std::vector<int> inputs;
      for (std::size_t i = 2; i + 1 < tokens.size(); ++i)
        inputs.push_back(parse_wire(tokens[i], n, line_no));
      if (inputs.empty()) throw ParseError(line_no, "uf needs at least one input wire");
      try {
        BooleanFunction f =
            BooleanFunction::from_text(static_cast<int>(inputs.size()), last.substr(6));
        circuit.gate(Gate::controlled_boolean(f, inputs, output));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (op == "fault") {
      if (tokens.size() != 3 && tokens.size() != 4)
        throw ParseError(line_no, "usage: fault X|Y|Z WIRE [@LABEL]");
      if (tokens[1].size() != 1 || std::string("XYZ").find(tokens[1][0]) == std::string::npos)
        throw ParseError(line_no, "fault type must be X, Y or Z");
      int q = parse_wire(tokens[2], n, line_no);
      PauliOperator p = tokens[1][0] == 'X'   ? PauliOperator::x_on(n, q)
                        : tokens[1][0] == 'Y' ? PauliOperator::y_on(n, q)
                                              : PauliOperator::z_on(n, q);
      std::string label;
      if (tokens.size() == 4) {
        if (tokens[3].size() < 2 || tokens[3][0] != '@')
          throw ParseError(line_no, "fault label must look like @name");
        label = tokens[3].substr(1);
        fault_labels.emplace_back(label, line_no);
      }
      circuit.fault(p, label);
    } else if (op == "label") {
      if (tokens.size() != 2) throw ParseError(line_no, "usage: label NAME");
      if (!labels.insert(tokens[1]).second)
        throw ParseError(line_no, "duplicate label '" + tokens[1] + "'");
      circuit.label(tokens[1]);
    } else if (op == "measure") {
      if (tokens.size() < 2) throw ParseError(line_no, "usage: measure WIRE... [basis=x]");
      char basis = 'Z';
      std::size_t end = tokens.size();
      if (tokens.back().rfind("basis=", 0) == 0) {
        std::string b = tokens.back().substr(6);
        if (b == "x" || b == "X") basis = 'X';
        else if (b == "z" || b == "Z") basis = 'Z';
        else throw ParseError(line_no, "unknown basis '" + b + "'");
        --end;
      }
      std::vector<int> wires;
      for (std::size_t i = 1; i < end; ++i) wires.push_back(parse_wire(tokens[i], n, line_no));
      if (wires.empty()) throw ParseError(line_no, "measure needs at least one wire");
      std::set<int> distinct(wires.begin(), wires.end());
      if (distinct.size() != wires.size())
        throw ParseError(line_no, "measure wires must be distinct");
      circuit.measure(wires, basis);
    } else {
      throw ParseError(line_no, "unknown instruction '" + op + "'");
    }
  }

  if (!declared) throw ParseError(line_no == 0 ? 1 : line_no, "empty program; expected 'qubits N'");
  for (const auto& [label, at_line] : fault_labels)
    if (labels.find(label) == labels.end())
      throw ParseError(at_line, "fault references unknown label '" + label + "'");
  return circuit;
}

namespace {

std::string render_fault(const FaultStep& f) {
  const PauliOperator& p = f.fault;
  int site = 0;
  for (int q = 1; q <= p.num_qubits(); ++q) {
    if (p.letter(q) != 'I') {
      if (site != 0) throw DimensionError("only single-site faults can be rendered");
      site = q;
    }
  }
  if (site == 0) throw DimensionError("cannot render an identity fault");
  const char letter = p.letter(site);
  const int want_k = letter == 'Y' ? 1 : 0;
  if (p.phase_exponent() != want_k) throw DimensionError("cannot render a phased fault");
  std::string out = std::string("fault ") + letter + " " + std::to_string(site);
  if (!f.label.empty()) out += " @" + f.label;
  return out;
}

}  // namespace

std::string render_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.num_qubits << "\n";
  for (const auto& inst : circuit.steps) {
    if (const auto* is = std::get_if<InitStep>(&inst)) {
      out << "init " << is->wire << " " << is->state << "\n";
    } else if (const auto* gs = std::get_if<GateStep>(&inst)) {
      const Gate& g = gs->gate;
      switch (g.kind) {
        case Gate::Kind::X:
        case Gate::Kind::Y:
        case Gate::Kind::Z:
        case Gate::Kind::H:
        case Gate::Kind::S:
          out << g.name() << " " << g.wires[0] << "\n";
          break;
        case Gate::Kind::Cnot:
        case Gate::Kind::Swap:
          out << g.name() << " " << g.wires[0] << " " << g.wires[1] << "\n";
          break;
        case Gate::Kind::ControlledBoolean: {
          out << "uf " << g.wires[0];
          for (std::size_t i = 1; i < g.wires.size(); ++i) out << " " << g.wires[i];
          out << " table=" << g.boolean.to_text() << "\n";
          break;
        }
        default:
          throw DimensionError("gate '" + g.name() + "' has no source form");
      }
    } else if (const auto* fs = std::get_if<FaultStep>(&inst)) {
      out << render_fault(*fs) << "\n";
    } else if (const auto* ms = std::get_if<MeasureStep>(&inst)) {
      out << "measure";
      for (int w : ms->wires) out << " " << w;
      if (ms->basis == 'X') out << " basis=x";
      out << "\n";
    } else if (const auto* ls = std::get_if<LabelStep>(&inst)) {
      out << "label " << ls->name << "\n";
    }
  }
  return out.str();
}

}  // namespace qlab
