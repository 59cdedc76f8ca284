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

#ifndef ARITHMAT_BIGINT_HPP
#define ARITHMAT_BIGINT_HPP

// Exact arbitrary-precision arithmetic used everywhere in the library.
// No floating point is allowed anywhere in the computation paths.

#include <cassert>

#include <boost/multiprecision/cpp_int.hpp>

namespace arithmat {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

inline Int ipow(const Int& base, unsigned k) {
  Int out = 1;
  Int b = base;
  while (k != 0) {
    if (k & 1u) out *= b;
    b *= b;
    k >>= 1u;
  }
  return out;
}

// Integer power with possibly negative exponent; base must be nonzero
// when k < 0.
inline Rational rpow(const Rational& base, int k) {
  if (k >= 0) {
    Rational out = 1;
    Rational b = base;
    unsigned e = static_cast<unsigned>(k);
    while (e != 0) {
      if (e & 1u) out *= b;
      b *= b;
      e >>= 1u;
    }
    return out;
  }
  assert(base != 0);
  return 1 / rpow(base, -k);
}

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline Int to_int(const Rational& r) {
  assert(is_integer(r));
  return Int(boost::multiprecision::numerator(r));
}

}  // namespace arithmat

#endif  // ARITHMAT_BIGINT_HPP
