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

#include <cmath>
#include <complex>
#include <map>
#include <string>

#include "qlab/circuit.hpp"
#include "qlab/errors.hpp"
#include "qlab/rng.hpp"

using namespace qlab;

namespace {

Circuit bell_circuit() {
  Circuit c(2);
  c.gate(Gate::h(1)).gate(Gate::cnot(1, 2)).measure({1, 2});
  return c;
}

double max_diff(const StateVector& a, const StateVector& b) {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.amp(i) - b.amp(i)));
  return worst;
}

}  // namespace

TEST_SUITE("circuit") {

TEST_CASE("bell circuit: correlated bits, collapsed state") {
  Rng rng(61);
  std::map<std::string, int> counts;
  for (int shot = 0; shot < 400; ++shot) {
    ExecutionResult r = execute(bell_circuit(), rng);
    REQUIRE(r.measurements.size() == 1);
    CHECK(r.measurements[0].wires == std::vector<int>{1, 2});
    CHECK(r.measurements[0].probability == doctest::Approx(0.5));
    counts[r.bit_string()]++;
    // State has collapsed onto the reported branch.
    std::uint64_t index = r.measurements[0].outcome.to_index();
    CHECK(std::abs(r.state.amp(index) - 1.0) < 1e-12);
  }
  CHECK(counts.size() == 2);
  CHECK(counts["00"] + counts["11"] == 400);
  CHECK(counts["00"] > 140);
  CHECK(counts["11"] > 140);
}

TEST_CASE("no measurement leaves the full superposition") {
  Circuit c(2);
  c.gate(Gate::h(1)).gate(Gate::cnot(1, 2));
  Rng rng(62);
  ExecutionResult r = execute(c, rng);
  CHECK(r.measurements.empty());
  CHECK(r.bit_string().empty());
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(r.state.amp(0).real() == doctest::Approx(s));
  CHECK(r.state.amp(3).real() == doctest::Approx(s));
}

TEST_CASE("init prepares all four single-qubit states") {
  Rng rng(63);
  auto prepared = [&](char state) {
    Circuit c(1);
    c.init(1, state);
    return execute(c, rng).state;
  };
  CHECK(std::abs(prepared('0').amp(0) - 1.0) == 0.0);
  CHECK(std::abs(prepared('1').amp(1) - 1.0) == 0.0);
  StateVector plus = prepared('+');
  CHECK(plus.amp(0).real() == doctest::Approx(std::sqrt(0.5)));
  CHECK(plus.amp(1).real() == doctest::Approx(std::sqrt(0.5)));
  StateVector minus = prepared('-');
  CHECK(minus.amp(0).real() == doctest::Approx(std::sqrt(0.5)));
  CHECK(minus.amp(1).real() == doctest::Approx(-std::sqrt(0.5)));
}

TEST_CASE("x-basis measurement step") {
  Circuit c(2);
  c.init(1, '-').init(2, '+').measure({1, 2}, 'X');
  Rng rng(64);
  ExecutionResult r = execute(c, rng);
  CHECK(r.bit_string() == "10");
  CHECK(r.measurements[0].probability == doctest::Approx(1.0));
  CHECK(r.measurements[0].basis == 'X');
}

TEST_CASE("measured bits concatenate in program order") {
  Circuit c(2);
  c.gate(Gate::x(1)).measure({1}).measure({2});
  Rng rng(65);
  ExecutionResult r = execute(c, rng);
  REQUIRE(r.measurements.size() == 2);
  CHECK(r.bit_string() == "10");
  CHECK(r.measurements[0].probability == doctest::Approx(1.0));
  CHECK(r.measurements[1].probability == doctest::Approx(1.0));
}

TEST_CASE("unlabelled faults fire where they are written") {
  // |+> -- Z fault -- H: ends in |1> deterministically.
  Circuit c(1);
  c.init(1, '+').fault(PauliOperator::z_on(1, 1)).gate(Gate::h(1)).measure({1});
  Rng rng(66);
  for (int i = 0; i < 16; ++i) CHECK(execute(c, rng).bit_string() == "1");
}

TEST_CASE("labelled faults fire at their label") {
  // The Z fault is declared after the H but bound to the label before it,
  // so it hits |+> (making |->), not |0>.
  Circuit c(1);
  c.init(1, '+').label("spot").gate(Gate::h(1)).fault(PauliOperator::z_on(1, 1), "spot");
  c.measure({1});
  Rng rng(67);
  for (int i = 0; i < 16; ++i) CHECK(execute(c, rng).bit_string() == "1");

  // Same text without the label binding: the fault hits |0> and does nothing.
  Circuit inplace(1);
  inplace.init(1, '+').gate(Gate::h(1)).fault(PauliOperator::z_on(1, 1)).measure({1});
  for (int i = 0; i < 16; ++i) CHECK(execute(inplace, rng).bit_string() == "0");
}

TEST_CASE("fault phases do not leak into probabilities") {
  Circuit c(1);
  c.init(1, '1').fault(PauliOperator::y_on(1, 1)).measure({1});
  Rng rng(68);
  ExecutionResult r = execute(c, rng);
  CHECK(r.bit_string() == "0");  // Y|1> = -i|0>
  CHECK(r.measurements[0].probability == doctest::Approx(1.0));
  CHECK(std::abs(std::abs(r.state.amp(0)) - 1.0) < 1e-12);
}

TEST_CASE("execute_on starts from a caller state") {
  Circuit c(1);
  c.gate(Gate::x(1)).measure({1});
  Rng rng(69);
  StateVector one = StateVector::basis(1, F2Vector::from_string("1"));
  ExecutionResult r = execute_on(c, one, rng);
  CHECK(r.bit_string() == "0");
  Circuit empty(2);
  StateVector bell = execute(bell_circuit(), rng).state;
  ExecutionResult keep = execute_on(empty, bell, rng);
  CHECK(max_diff(keep.state, bell) == 0.0);
  CHECK_THROWS_AS(execute_on(c, StateVector(2), rng), DimensionError);
}

TEST_CASE("deterministic per seed") {
  auto transcript = [](std::uint64_t seed) {
    Rng rng(seed);
    std::string bits;
    for (int i = 0; i < 20; ++i) bits += execute(bell_circuit(), rng).bit_string();
    return bits;
  };
  CHECK(transcript(5) == transcript(5));
  CHECK(transcript(5) != transcript(6));
}

TEST_CASE("validation rejects malformed programs") {
  Rng rng(70);
  Circuit wire_range(2);
  wire_range.gate(Gate::x(3));
  CHECK_THROWS_AS(wire_range.validate(), DimensionError);
  CHECK_THROWS_AS(execute(wire_range, rng), DimensionError);

  Circuit dup_measure(2);
  dup_measure.measure({1, 1});
  CHECK_THROWS_AS(dup_measure.validate(), DimensionError);

  Circuit bad_init(1);
  bad_init.init(1, 'q');
  CHECK_THROWS_AS(bad_init.validate(), DimensionError);

  Circuit thin_fault(3);
  thin_fault.fault(PauliOperator::x_on(2, 1));
  CHECK_THROWS_AS(thin_fault.validate(), DimensionError);

  Circuit dangling(1);
  dangling.fault(PauliOperator::x_on(1, 1), "nowhere");
  CHECK_THROWS_AS(dangling.validate(), DimensionError);

  Circuit twice(1);
  twice.label("a").label("a");
  CHECK_THROWS_AS(twice.validate(), DimensionError);

  Circuit ok(2);
  ok.label("a").init(1, '+').fault(PauliOperator::x_on(2, 2), "a").measure({2, 1}, 'X');
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("gate_count tallies by kind") {
  Circuit c(3);
  c.gate(Gate::h(1)).gate(Gate::cnot(1, 2)).gate(Gate::cnot(1, 3)).gate(Gate::h(1));
  c.init(2, '+').measure({1});
  CHECK(c.gate_count(Gate::Kind::H) == 2);
  CHECK(c.gate_count(Gate::Kind::Cnot) == 2);
  CHECK(c.gate_count(Gate::Kind::Swap) == 0);
}

}  // TEST_SUITE
