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

#include "poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "error.hpp"

namespace arithmat {

const char* family_name(VarFamily family) {
  static const char* const names[kVarFamilyCount] = {
      "q", "p", "x", "y", "a", "b", "c", "d", "l", "s", "v", "u"};
  return names[static_cast<int>(family)];
}

bool family_is_indexed(VarFamily family) {
  return family == VarFamily::v || family == VarFamily::u;
}

std::string var_name(VarId id) {
  std::string name = family_name(id.family);
  if (family_is_indexed(id.family)) name += std::to_string(id.index);
  return name;
}

Monomial::Monomial(ExpList exponents) : exps_(std::move(exponents)) {
  std::sort(exps_.begin(), exps_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // merge duplicates, drop zero exponents
  ExpList merged;
  for (const auto& [var, exp] : exps_) {
    if (!merged.empty() && merged.back().first == var) {
      merged.back().second += exp;
      if (merged.back().second == 0) merged.pop_back();
    } else if (exp != 0) {
      merged.push_back({var, exp});
    }
  }
  exps_ = std::move(merged);
}

Monomial Monomial::variable(VarId id, int exponent) {
  Monomial m;
  if (exponent != 0) m.exps_.push_back({id, exponent});
  return m;
}

int Monomial::exponent_of(VarId id) const {
  auto it = std::lower_bound(
      exps_.begin(), exps_.end(), id,
      [](const auto& entry, VarId key) { return entry.first < key; });
  if (it != exps_.end() && it->first == id) return it->second;
  return 0;
}

int Monomial::total_degree() const {
  int degree = 0;
  for (const auto& [var, exp] : exps_) degree += exp;
  return degree;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.exps_.reserve(exps_.size() + other.exps_.size());
  auto a = exps_.begin();
  auto b = other.exps_.begin();
  while (a != exps_.end() || b != other.exps_.end()) {
    if (b == other.exps_.end() || (a != exps_.end() && a->first < b->first)) {
      out.exps_.push_back(*a++);
    } else if (a == exps_.end() || b->first < a->first) {
      out.exps_.push_back(*b++);
    } else {
      int exp = a->second + b->second;
      if (exp != 0) out.exps_.push_back({a->first, exp});
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::pow(int k) const {
  Monomial out;
  if (k == 0) return out;
  out.exps_ = exps_;
  for (auto& [var, exp] : out.exps_) {
    const long long scaled = static_cast<long long>(exp) * k;
    assert(scaled == static_cast<int>(scaled) && "exponent overflow");
    exp = static_cast<int>(scaled);
  }
  return out;
}

Monomial Monomial::without(VarId id) const {
  Monomial out;
  out.exps_.reserve(exps_.size());
  for (const auto& entry : exps_)
    if (entry.first != id) out.exps_.push_back(entry);
  return out;
}

LaurentPoly::LaurentPoly(Int constant) {
  if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

LaurentPoly LaurentPoly::variable(VarId id, int exponent) {
  return term(1, Monomial::variable(id, exponent));
}

LaurentPoly LaurentPoly::term(Int coefficient, Monomial m) {
  LaurentPoly f;
  if (coefficient != 0) f.terms_.emplace(std::move(m), std::move(coefficient));
  return f;
}

Int LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Int& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [ma, ca] : lhs.terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator-(const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [m, c] : f.terms_) out.terms_.emplace(m, -c);
  return out;
}

LaurentPoly pow(const LaurentPoly& f, int k) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "negative polynomial power");
  LaurentPoly out = 1;
  for (int i = 0; i < k; ++i) out *= f;
  return out;
}

namespace {

// coefficient^k where k may be negative; only unit coefficients can be
// raised to negative powers without leaving the integers.
Int coefficient_power(const Int& coefficient, int k, VarId var) {
  if (k >= 0) return ipow(coefficient, static_cast<unsigned>(k));
  if (abs(coefficient) != 1)
    throw Error(ErrorCode::non_unit_coefficient_at_negative_exponent,
                "cannot invert coefficient " + coefficient.str() +
                    " substituted for " + var_name(var));
  return (coefficient < 0 && (k & 1)) ? Int(-1) : Int(1);
}

}  // namespace

LaurentPoly substitute_monomial(const LaurentPoly& f, VarId var,
                                const Int& coefficient, const Monomial& m) {
  if (coefficient == 0)
    throw Error(ErrorCode::invalid_argument, "zero substitution coefficient");
  LaurentPoly out;
  for (const auto& [mono, c] : f.terms()) {
    const int k = mono.exponent_of(var);
    if (k == 0) {
      out.add_term(mono, c);
      continue;
    }
    out.add_term(mono.without(var).times(m.pow(k)),
                 c * coefficient_power(coefficient, k, var));
  }
  return out;
}

LaurentPoly substitute_poly(const LaurentPoly& f, VarId var,
                            const LaurentPoly& g) {
  if (min_exponent_in(f, var) < 0)
    throw Error(ErrorCode::negative_exponent_substitution,
                var_name(var) + " occurs with a negative exponent");
  std::vector<LaurentPoly> powers = {LaurentPoly(1)};
  LaurentPoly out;
  for (const auto& [mono, c] : f.terms()) {
    const int k = mono.exponent_of(var);
    while (static_cast<int>(powers.size()) <= k)
      powers.push_back(powers.back() * g);
    out += LaurentPoly::term(c, mono.without(var)) * powers[k];
  }
  return out;
}

LaurentPoly partial_eval(const LaurentPoly& f, VarId var,
                         const Rational& value) {
  std::map<Monomial, Rational> acc;
  for (const auto& [mono, c] : f.terms()) {
    const int k = mono.exponent_of(var);
    if (k < 0 && value == 0)
      throw Error(ErrorCode::zero_at_negative_exponent,
                  var_name(var) + "^" + std::to_string(k) + " at 0");
    if (k != 0 && value == 0) continue;  // positive power of zero vanishes
    Rational contribution = Rational(c) * rpow(value, k);
    if (contribution == 0) continue;
    auto [it, inserted] = acc.emplace(mono.without(var), contribution);
    if (!inserted) it->second += contribution;
  }
  LaurentPoly out;
  for (const auto& [mono, c] : acc) {
    if (c == 0) continue;
    if (!is_integer(c))
      throw Error(ErrorCode::non_integral_result,
                  "coefficient " + c.str() + " of " + canonical_string(
                      LaurentPoly::term(1, mono)));
    out.add_term(mono, to_int(c));
  }
  return out;
}

Rational eval(const LaurentPoly& f, const std::map<VarId, Rational>& point) {
  Rational total = 0;
  for (const auto& [mono, c] : f.terms()) {
    Rational term_value(c);
    for (const auto& [var, exp] : mono.exponents()) {
      auto it = point.find(var);
      if (it == point.end())
        throw Error(ErrorCode::invalid_argument,
                    "unassigned variable " + var_name(var));
      if (it->second == 0) {
        if (exp < 0)
          throw Error(ErrorCode::zero_at_negative_exponent,
                      var_name(var) + " evaluated at 0");
        term_value = 0;
        break;
      }
      term_value *= rpow(it->second, exp);
    }
    total += term_value;
  }
  return total;
}

namespace {

// Display order: total degree, then lexicographic on the exponent lists
// (which compare by VarId first).
bool display_less(const Monomial& a, const Monomial& b) {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

std::string term_body(const Int& magnitude, const Monomial& m) {
  if (m.is_unit()) return magnitude.str();
  std::string out;
  if (magnitude != 1) out = magnitude.str() + "*";
  bool first = true;
  for (const auto& [var, exp] : m.exponents()) {
    if (!first) out += "*";
    first = false;
    out += var_name(var);
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

}  // namespace

std::string canonical_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Monomial, Int>> terms(f.terms().begin(),
                                              f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return display_less(a.first, b.first);
  });
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += term_body(abs(c), mono);
  }
  return out;
}

int degree_in(const LaurentPoly& f, VarId var) {
  int best = 0;
  for (const auto& [mono, c] : f.terms())
    best = std::max(best, mono.exponent_of(var));
  return best;
}

int min_exponent_in(const LaurentPoly& f, VarId var) {
  int best = 0;
  for (const auto& [mono, c] : f.terms())
    best = std::min(best, mono.exponent_of(var));
  return best;
}

std::vector<VarId> support_vars(const LaurentPoly& f) {
  std::vector<VarId> vars;
  for (const auto& [mono, c] : f.terms())
    for (const auto& [var, exp] : mono.exponents()) vars.push_back(var);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

}  // namespace arithmat
