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

#include "qlab/circuit.hpp"

namespace qlab {

/// Line-based circuit language.  Wires are 1-based; '#' starts a comment;
/// blank lines are ignored.  Errors carry the offending line number.
///
///   qubits N                  declaration, must come first
///   init Q S                  S in {0, 1, +, -}
///   h|x|y|z|s Q
///   cnot C T
///   swap A B
///   uf OUT IN1 ... INK table=T   T hex, or a bit string of length 2^K
///   fault P Q [@LABEL]        P in {X, Y, Z}; fires at LABEL if given
///   label NAME
///   measure Q1 ... QK [basis=x]
Circuit parse_circuit(const std::string& text);

/// Inverse of parse_circuit: parse_circuit(render_circuit(c)) reproduces c.
std::string render_circuit(const Circuit& circuit);

}  // namespace qlab
