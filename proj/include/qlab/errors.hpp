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

#include <stdexcept>
#include <string>

namespace qlab {

/// Dimension / index / argument mismatches.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Request exceeds a hard resource cap (e.g. too many qubits for dense simulation).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Numeric contract violated (non-unitary payload, unnormalized state, ...).
class NumericError : public std::invalid_argument {
 public:
  explicit NumericError(const std::string& what) : std::invalid_argument(what) {}
};

/// Program text rejected; carries the 1-based source line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A gate outside the supported Clifford set reached the Pauli propagation engine.
class UnsupportedGateError : public std::runtime_error {
 public:
  UnsupportedGateError(std::size_t step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// A syndrome with no decodable error pattern.
class UncorrectableSyndromeError : public std::runtime_error {
 public:
  explicit UncorrectableSyndromeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qlab
