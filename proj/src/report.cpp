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

#include "qlab/report.hpp"

#include <cmath>
#include <cstdio>

#include "qlab/errors.hpp"

namespace qlab {

RunReport run(const Circuit& circuit, int shots, std::uint64_t seed, const RunOptions& options) {
  if (shots < 1) throw DimensionError("need at least one shot");
  circuit.validate();
  bool has_measure = false;
  for (const auto& inst : circuit.steps)
    if (std::holds_alternative<MeasureStep>(inst)) has_measure = true;

  RunReport report;
  report.num_qubits = circuit.num_qubits;
  report.shots = shots;
  report.seed = seed;
  const Rng root(seed);
  for (int shot = 0; shot < shots; ++shot) {
    Rng stream = root.derive(static_cast<std::uint64_t>(shot));
    ExecutionResult res = execute(circuit, stream);
    std::string bits = res.bit_string();
    report.outcomes.push_back(bits);
    report.counts[bits] += 1;
    if (shot == shots - 1 && (options.dump_state || !has_measure))
      report.final_state = std::move(res.state);
  }
  for (const auto& [bits, count] : report.counts)
    report.frequencies[bits] = static_cast<double>(count) / static_cast<double>(shots);
  return report;
}

std::string format_amplitude(Complex a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", a.real());
  std::string out = buf;
  double im = a.imag();
  if (im == 0.0) im = 0.0;  // drop the sign of -0
  if (im >= 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", im);
    out += "+";
  } else {
    std::snprintf(buf, sizeof buf, "%.17g", -im);
    out += "-";
  }
  out += buf;
  out += "j";
  return out;
}

}  // namespace qlab
