// Copyright 2026 The Authors.
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

#ifndef ARITHMAT_RAND_UTIL_HPP
#define ARITHMAT_RAND_UTIL_HPP

// Deterministic sampling helpers. std::uniform_int_distribution is
// implementation-defined, so seeded corpora draw through these instead.

#include <cstdint>
#include <random>

#include "bigint.hpp"

namespace arithmat {

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<int>(draw % span);
}

// Nonzero rational with small numerator and denominator; safe to invert.
inline Rational sample_nonzero_rational(std::mt19937_64& rng) {
  const int numerator = uniform_int(rng, 1, 9);
  const int denominator = uniform_int(rng, 1, 4);
  const bool negative = uniform_int(rng, 0, 1) == 1;
  return Rational(negative ? -numerator : numerator, denominator);
}

}  // namespace arithmat

#endif  // ARITHMAT_RAND_UTIL_HPP
