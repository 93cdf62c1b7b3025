// Copyright 2026 The Heddle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>

namespace heddle {

// Deterministic 64-bit generator used for every randomized decision in the
// project.  The algorithm is SplitMix64 (Steele, Lea, Flood: "Fast splittable
// pseudorandom number generators", OOPSLA 2014): a counter advanced by a
// fixed odd gamma, finalized by an avalanching mix.  It is pinned here, byte
// for byte, so that a (seed, draw sequence) pair replays identically on every
// platform and in every future build.  std::mt19937 plus the standard
// distributions would not give that guarantee (distribution output is
// implementation-defined), which is why this generator is spelled out.
class Rng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Raw 64-bit draw.
  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  // Uniform draw from [0, bound).  bound == 0 is a usage error.
  // Rejection sampling removes modulo bias: draws at or above the largest
  // multiple of bound below 2^64 are discarded.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) {
      throw std::invalid_argument("Rng::next_below: bound must be nonzero");
    }
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= limit);
    return draw % bound;
  }

  std::uint64_t state() const { return state_; }

  // The output function, exposed so derived streams (per-iteration seeds)
  // can be documented in terms of it.
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

 private:
  std::uint64_t state_;
};

// Seed for iteration i of a search run with master seed m: element i of the
// SplitMix64 stream starting at m.  Position-based so that parallel workers
// can claim iterations in any order and still agree on every seed.
inline std::uint64_t iteration_seed(std::uint64_t master, std::uint64_t i) {
  return Rng::mix(master + (i + 1) * Rng::kGamma);
}

}  // namespace heddle
