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

#include <doctest.h>

#include <string>
#include <variant>

#include "qlab/circuit.hpp"
#include "qlab/dsl.hpp"
#include "qlab/errors.hpp"
#include "qlab/rng.hpp"

using namespace qlab;

namespace {

int thrown_line(const std::string& program) {
  try {
    parse_circuit(program);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_SUITE("dsl") {

TEST_CASE("a bell program parses into the expected steps") {
  Circuit c = parse_circuit(
      "# entangle and read out\n"
      "qubits 2\n"
      "h 1\n"
      "cnot 1 2\n"
      "measure 1 2\n");
  CHECK(c.num_qubits == 2);
  REQUIRE(c.steps.size() == 3);
  CHECK(std::get<GateStep>(c.steps[0]).gate.kind == Gate::Kind::H);
  const Gate& cx = std::get<GateStep>(c.steps[1]).gate;
  CHECK(cx.kind == Gate::Kind::Cnot);
  CHECK(cx.wires == std::vector<int>{1, 2});
  const MeasureStep& m = std::get<MeasureStep>(c.steps[2]);
  CHECK(m.wires == std::vector<int>{1, 2});
  CHECK(m.basis == 'Z');
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("whitespace, comments and blank lines are ignored") {
  Circuit c = parse_circuit(
      "\n"
      "   qubits   1   # one wire\n"
      "\n"
      "  h 1# trailing comment without space\n"
      "#full-line comment\n");
  CHECK(c.num_qubits == 1);
  CHECK(c.gate_count(Gate::Kind::H) == 1);
}

TEST_CASE("every instruction form parses") {
  Circuit c = parse_circuit(
      "qubits 4\n"
      "init 1 +\n"
      "init 2 -\n"
      "init 3 1\n"
      "x 1\n"
      "y 2\n"
      "z 3\n"
      "s 4\n"
      "swap 1 4\n"
      "label here\n"
      "fault Z 2\n"
      "fault Y 3 @here\n"
      "uf 4 1 2 3 table=0f\n"
      "measure 4 2 basis=x\n"
      "measure 1\n");
  CHECK_NOTHROW(c.validate());
  CHECK(c.gate_count(Gate::Kind::Swap) == 1);
  CHECK(c.gate_count(Gate::Kind::ControlledBoolean) == 1);
  const InitStep& minus = std::get<InitStep>(c.steps[1]);
  CHECK(minus.wire == 2);
  CHECK(minus.state == '-');
  const FaultStep& inline_fault = std::get<FaultStep>(c.steps[9]);
  CHECK(inline_fault.fault == PauliOperator::z_on(4, 2));
  CHECK(inline_fault.label.empty());
  const FaultStep& at_label = std::get<FaultStep>(c.steps[10]);
  CHECK(at_label.fault == PauliOperator::y_on(4, 3));
  CHECK(at_label.label == "here");
  const Gate& uf = std::get<GateStep>(c.steps[11]).gate;
  CHECK(uf.wires == std::vector<int>{4, 1, 2, 3});
  CHECK(uf.boolean.arity() == 3);
  const MeasureStep& xm = std::get<MeasureStep>(c.steps[12]);
  CHECK(xm.wires == std::vector<int>{4, 2});
  CHECK(xm.basis == 'X');
}

TEST_CASE("parsed programs execute like hand-built circuits") {
  Circuit parsed = parse_circuit("qubits 2\nh 1\ncnot 1 2\nmeasure 1 2\n");
  Circuit built(2);
  built.gate(Gate::h(1)).gate(Gate::cnot(1, 2)).measure({1, 2});
  Rng a(7), b(7);
  for (int i = 0; i < 20; ++i)
    CHECK(execute(parsed, a).bit_string() == execute(built, b).bit_string());
}

TEST_CASE("errors carry one-based line numbers") {
  CHECK(thrown_line("") == 1);
  CHECK(thrown_line("qubits 2\ncnot 1\n") == 2);
  CHECK(thrown_line("qubits 2\nh 1\nx 5\n") == 3);
  CHECK(thrown_line("h 1\n") == 1);
  // The unknown-label report points at the fault, not the end of file.
  CHECK(thrown_line("qubits 1\nfault X 1 @nowhere\nh 1\nh 1\n") == 2);
}

TEST_CASE("malformed programs are rejected with specific messages") {
  CHECK_THROWS_WITH_AS(parse_circuit(""), "line 1: empty program; expected 'qubits N'", ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("h 1\n"), "line 1: program must start with 'qubits N'",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\ncnot 1\n"), "line 2: usage: cnot WIRE WIRE",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\nx 5\n"), "line 2: wire 5 outside 1..2", ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 0\n"), "line 1: qubit count must be positive",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\nqubits 2\n"),
                       "line 2: duplicate 'qubits' declaration", ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\nfrobnicate 1\n"),
                       "line 2: unknown instruction 'frobnicate'", ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 1\nh one\n"),
                       "line 2: expected an integer, got 'one'", ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 1\ninit 1 q\n"), "line 2: usage: init WIRE 0|1|+|-",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\ncnot 1 1\n"), "line 2: cnot wires must differ",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 1\nlabel a\nlabel a\n"),
                       "line 3: duplicate label 'a'", ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 1\nfault X 1 @gone\n"),
                       "line 2: fault references unknown label 'gone'", ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 1\nfault Q 1\n"),
                       "line 2: fault type must be X, Y or Z", ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 1\nfault X 1 nowhere\n"),
                       "line 2: fault label must look like @name", ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\nmeasure 1 1\n"),
                       "line 2: measure wires must be distinct", ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 1\nmeasure 1 basis=w\n"), "line 2: unknown basis 'w'",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 1\nmeasure basis=x\n"),
                       "line 2: measure needs at least one wire", ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 3\nuf 3 1 2 table=xyzq\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 3\nuf 3 1 2 table=0f\n"), ParseError);  // wrong length
  CHECK_THROWS_AS(parse_circuit("qubits 3\nuf 3 table=01\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 3\nuf 3 1 2\n"), ParseError);
}

TEST_CASE("rendering is stable under a parse round trip") {
  const std::string canonical =
      "qubits 4\n"
      "init 1 +\n"
      "h 2\n"
      "cnot 2 3\n"
      "label spot\n"
      "fault Y 3 @spot\n"
      "fault Z 1\n"
      "uf 4 1 2 3 table=96\n"
      "measure 2 3 basis=x\n"
      "measure 1 4\n";
  Circuit c = parse_circuit(canonical);
  CHECK(render_circuit(c) == canonical);
  CHECK(render_circuit(parse_circuit(render_circuit(c))) == canonical);
}

TEST_CASE("hand-built circuits render to their source form") {
  Circuit c(2);
  c.gate(Gate::h(1)).gate(Gate::cnot(1, 2)).measure({1, 2});
  CHECK(render_circuit(c) == "qubits 2\nh 1\ncnot 1 2\nmeasure 1 2\n");
  Circuit x(1);
  x.init(1, '-').measure({1}, 'X');
  CHECK(render_circuit(x) == "qubits 1\ninit 1 -\nmeasure 1 basis=x\n");
}

TEST_CASE("unrenderable circuits are refused") {
  Circuit wide_fault(2);
  wide_fault.fault(PauliOperator::parse("X1X2", 2));
  CHECK_THROWS_AS(render_circuit(wide_fault), DimensionError);

  Circuit identity_fault(1);
  identity_fault.fault(PauliOperator::identity(1));
  CHECK_THROWS_AS(render_circuit(identity_fault), DimensionError);

  Circuit phased(1);
  phased.fault(PauliOperator::parse("-X1", 1));
  CHECK_THROWS_AS(render_circuit(phased), DimensionError);

  Circuit custom(1);
  custom.gate(Gate::custom_unitary(mat_h(), {1}));
  CHECK_THROWS_WITH_AS(render_circuit(custom), doctest::Contains("no source form"),
                       DimensionError);

  // Y faults carry their canonical phase and do render.
  Circuit fine(1);
  fine.fault(PauliOperator::y_on(1, 1));
  CHECK(render_circuit(fine) == "qubits 1\nfault Y 1\n");
}

}  // TEST_SUITE
