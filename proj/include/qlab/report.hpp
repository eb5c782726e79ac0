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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlab/circuit.hpp"

namespace qlab {

/// Aggregated result of a multi-shot run.  Shot k uses the stream
/// rng(seed).derive(k), so runs are bit-reproducible for a fixed seed.
struct RunReport {
  int num_qubits = 0;
  int shots = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> outcomes;        // concatenated bits, one entry per shot
  std::map<std::string, int> counts;
  std::map<std::string, double> frequencies;  // counts / shots; sums to 1
  std::optional<StateVector> final_state;   // last shot, when requested
};

struct RunOptions {
  bool dump_state = false;  // forced on when the circuit has no measurements
};

RunReport run(const Circuit& circuit, int shots, std::uint64_t seed, const RunOptions& options = {});

/// "re+imj" with 17 significant digits, e.g. "0.70710678118654746+0j".
std::string format_amplitude(Complex a);

}  // namespace qlab
