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

#ifndef ARITHMAT_POLY_HPP
#define ARITHMAT_POLY_HPP

// Sparse multivariate Laurent polynomials over arbitrary-precision
// integers. Values are immutable after construction and every operation
// is pure; all results are kept canonical (no zero exponents, no zero
// coefficients), so equality is plain structural equality.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace arithmat {

// The closed variable universe. The declaration order is the canonical
// variable order; v and u are indexed per ground-set element, the rest
// are plain symbols.
enum class VarFamily : std::uint8_t { q, p, x, y, a, b, c, d, lambda, xi, v, u };

inline constexpr int kVarFamilyCount = 12;

const char* family_name(VarFamily family);
bool family_is_indexed(VarFamily family);

struct VarId {
  VarFamily family = VarFamily::q;
  std::int32_t index = -1;  // ground-set element label; >= 0 exactly for v/u

  friend constexpr bool operator==(const VarId&, const VarId&) = default;
  friend constexpr auto operator<=>(const VarId&, const VarId&) = default;

  static constexpr VarId q() { return {VarFamily::q, -1}; }
  static constexpr VarId p() { return {VarFamily::p, -1}; }
  static constexpr VarId x() { return {VarFamily::x, -1}; }
  static constexpr VarId y() { return {VarFamily::y, -1}; }
  static constexpr VarId a() { return {VarFamily::a, -1}; }
  static constexpr VarId b() { return {VarFamily::b, -1}; }
  static constexpr VarId c() { return {VarFamily::c, -1}; }
  static constexpr VarId d() { return {VarFamily::d, -1}; }
  static constexpr VarId lambda() { return {VarFamily::lambda, -1}; }
  static constexpr VarId xi() { return {VarFamily::xi, -1}; }
  static constexpr VarId v(int element) { return {VarFamily::v, element}; }
  static constexpr VarId u(int element) { return {VarFamily::u, element}; }
};

std::string var_name(VarId id);

// Product of variable powers with nonzero integer exponents, kept sorted
// by VarId. The empty monomial is the unit.
class Monomial {
 public:
  using ExpList = std::vector<std::pair<VarId, int>>;

  Monomial() = default;
  explicit Monomial(ExpList exponents);

  static Monomial variable(VarId id, int exponent = 1);

  bool is_unit() const { return exps_.empty(); }
  int exponent_of(VarId id) const;
  bool contains(VarId id) const { return exponent_of(id) != 0; }
  int total_degree() const;

  Monomial times(const Monomial& other) const;
  Monomial pow(int k) const;
  Monomial without(VarId id) const;

  const ExpList& exponents() const { return exps_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  ExpList exps_;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Int>;

  LaurentPoly() = default;  // zero
  LaurentPoly(int constant) : LaurentPoly(Int(constant)) {}
  LaurentPoly(Int constant);

  static LaurentPoly variable(VarId id, int exponent = 1);
  static LaurentPoly term(Int coefficient, Monomial m);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Int coefficient(const Monomial& m) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator-(const LaurentPoly& f);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  void add_term(const Monomial& m, const Int& coefficient);

 private:
  TermMap terms_;
};

// f with var^k replaced by coefficient^k * m^k for every occurrence.
// Requires |coefficient| = 1 whenever var occurs with a negative exponent,
// otherwise the result would leave the integer Laurent ring.
LaurentPoly substitute_monomial(const LaurentPoly& f, VarId var,
                                const Int& coefficient, const Monomial& m);

// Polynomial composition: var must occur with nonnegative exponents only.
LaurentPoly substitute_poly(const LaurentPoly& f, VarId var,
                            const LaurentPoly& g);

// Evaluates var at an exact rational value and eliminates it from the
// support. The summed coefficients must come out integral.
LaurentPoly partial_eval(const LaurentPoly& f, VarId var,
                         const Rational& value);

// Full evaluation at a rational point; every variable of f must be
// assigned, and inverted variables must get nonzero values.
Rational eval(const LaurentPoly& f, const std::map<VarId, Rational>& point);

// k >= 0.
LaurentPoly pow(const LaurentPoly& f, int k);

// Deterministic rendering: terms ascending by total degree, ties broken
// lexicographically in the variable order; e.g. "1 + 2*q^-1*v0".
std::string canonical_string(const LaurentPoly& f);

// Largest exponent of var over all terms, 0 when var is absent.
int degree_in(const LaurentPoly& f, VarId var);

// Smallest exponent of var over all terms, 0 when var is absent.
int min_exponent_in(const LaurentPoly& f, VarId var);

std::vector<VarId> support_vars(const LaurentPoly& f);

}  // namespace arithmat

#endif  // ARITHMAT_POLY_HPP
