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
#include <vector>

namespace qlab {

/// Deterministic PRNG: SplitMix64 (Steele, Lea & Flood), 64-bit state.
///
/// next_u64 advances the state by the golden-gamma constant and applies the
/// standard finalizer.  Identical seeds give identical streams on every
/// platform; no global state, no std::random_device.
///
/// derive(k) returns an independent stream for sub-task k (e.g. shot k of a
/// sampling run): the child is seeded with mix(seed ^ (GAMMA * (k + 1))),
/// where mix is the SplitMix64 finalizer and seed is the *initial* seed of
/// this generator, so derivation does not depend on how much the parent has
/// been consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  Rng derive(std::uint64_t stream) const {
    std::uint64_t z = seed_ ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return Rng(z ^ (z >> 31));
  }

  std::uint64_t initial_seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

/// Samples an index from a discrete distribution.  The cumulative sum is
/// accumulated left to right in index order (documented so runs are
/// bit-reproducible); u is one next_double draw.
std::size_t sample_index(const std::vector<double>& probabilities, Rng& rng);

}  // namespace qlab
