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

#include "tutte.hpp"

#include "error.hpp"

namespace arithmat {

LaurentPoly multivariate_Z(const MultiplicityMatroid& m, QVar qvar, VVar vvar,
                           int sign) {
  const VarId q = qvar_id(qvar);
  LaurentPoly total;
  for (SubsetMask a = 0; a <= m.full_set(); ++a) {
    Monomial mono = Monomial::variable(q, -m.rank(a));
    for (int e : mask_elements(a))
      mono = mono.times(Monomial::variable(vvar_id(vvar, m.label(e))));
    Int coefficient = m.multiplicity(a);
    if (sign < 0 && (subset_size(a) & 1)) coefficient = -coefficient;
    total.add_term(mono, coefficient);
  }
  return total;
}

LaurentPoly univariate_Z(const MultiplicityMatroid& m, QVar qvar, VVar vvar,
                         int sign) {
  const VarId q = qvar_id(qvar);
  const VarId w = vvar_id(vvar, 0);
  LaurentPoly total;
  for (SubsetMask a = 0; a <= m.full_set(); ++a) {
    const int k = subset_size(a);
    Monomial mono =
        Monomial::variable(q, -m.rank(a)).times(Monomial::variable(w, k));
    Int coefficient = m.multiplicity(a);
    if (sign < 0 && (k & 1)) coefficient = -coefficient;
    total.add_term(mono, coefficient);
  }
  return total;
}

namespace {

LaurentPoly corank_nullity_sum(const MultiplicityMatroid& m, bool weighted) {
  const LaurentPoly x1 = LaurentPoly::variable(VarId::x()) - 1;
  const LaurentPoly y1 = LaurentPoly::variable(VarId::y()) - 1;
  const int full_rank = m.full_rank();
  LaurentPoly total;
  for (SubsetMask a = 0; a <= m.full_set(); ++a) {
    LaurentPoly term = weighted ? LaurentPoly(m.multiplicity(a)) : LaurentPoly(1);
    term *= pow(x1, full_rank - m.rank(a));
    term *= pow(y1, subset_size(a) - m.rank(a));
    total += term;
  }
  return total;
}

}  // namespace

LaurentPoly arithmetic_tutte(const MultiplicityMatroid& m) {
  return corank_nullity_sum(m, true);
}

LaurentPoly classical_tutte(const MultiplicityMatroid& m) {
  return corank_nullity_sum(m, false);
}

LaurentPoly characteristic(const MultiplicityMatroid& m, VarId var) {
  const int full_rank = m.full_rank();
  LaurentPoly total;
  for (SubsetMask a = 0; a <= m.full_set(); ++a) {
    Int coefficient = m.multiplicity(a);
    if (subset_size(a) & 1) coefficient = -coefficient;
    total.add_term(Monomial::variable(var, full_rank - m.rank(a)), coefficient);
  }
  return total;
}

LaurentPoly compute_poly(const MultiplicityMatroid& m, PolyKind kind,
                         QVar qvar, VVar vvar) {
  switch (kind) {
    case PolyKind::sokal_z:
      return multivariate_Z(m.trivialized(), qvar, vvar);
    case PolyKind::arithmetic_z:
      return multivariate_Z(m, qvar, vvar);
    case PolyKind::tutte:
      return classical_tutte(m);
    case PolyKind::arithmetic_tutte:
      return arithmetic_tutte(m);
    case PolyKind::characteristic:
      return characteristic(m);
  }
  throw Error(ErrorCode::invalid_argument, "unknown polynomial kind");
}

const char* identity_token(IdentityId id) {
  switch (id) {
    case IdentityId::product_multivariate: return "product-mv";
    case IdentityId::product_univariate: return "product-uv";
    case IdentityId::single_multivariate: return "single-mv";
    case IdentityId::single_univariate: return "single-uv";
    case IdentityId::dupont_abcd: return "dupont";
    case IdentityId::backman_lenz: return "backman-lenz";
    case IdentityId::mixed_tutte: return "mixed";
    case IdentityId::char_convolution: return "char";
    case IdentityId::classical_kook: return "kook";
    case IdentityId::z_to_m_relation: return "z-to-m";
    case IdentityId::chi_relation_arithmetic: return "chi-arithmetic";
    case IdentityId::chi_relation_classical: return "chi-classical";
  }
  return "unknown";
}

IdentityReport check_Z_to_M_relation(const MultiplicityMatroid& m) {
  IdentityReport report;
  report.id = IdentityId::z_to_m_relation;
  report.lhs = arithmetic_tutte(m);

  const LaurentPoly z = multivariate_Z(m);
  const LaurentPoly x1 = LaurentPoly::variable(VarId::x()) - 1;
  const LaurentPoly y1 = LaurentPoly::variable(VarId::y()) - 1;
  const int full_rank = m.full_rank();
  LaurentPoly rhs;
  for (const auto& [mono, coefficient] : z.terms()) {
    // the term of subset A carries q^-rk(A) and one v_e per element of A
    const int q_exponent = mono.exponent_of(VarId::q());
    const int subset_cardinality =
        static_cast<int>(mono.exponents().size()) - (q_exponent != 0 ? 1 : 0);
    rhs += LaurentPoly(coefficient) * pow(x1, full_rank + q_exponent) *
           pow(y1, subset_cardinality + q_exponent);
  }
  report.rhs_first = rhs;
  report.equal = report.lhs == report.rhs_first;
  return report;
}

namespace {

IdentityReport chi_relation(const MultiplicityMatroid& m, IdentityId id) {
  IdentityReport report;
  report.id = id;
  report.lhs = characteristic(m);
  LaurentPoly z = multivariate_Z(m);
  for (int e = 0; e < m.size(); ++e)
    z = partial_eval(z, VarId::v(m.label(e)), Rational(-1));
  z = substitute_monomial(z, VarId::q(), 1,
                          Monomial::variable(VarId::lambda()));
  report.rhs_first =
      LaurentPoly::variable(VarId::lambda(), m.full_rank()) * z;
  report.equal = report.lhs == report.rhs_first;
  return report;
}

}  // namespace

std::pair<IdentityReport, IdentityReport> check_chi_relations(
    const MultiplicityMatroid& m) {
  return {chi_relation(m, IdentityId::chi_relation_arithmetic),
          chi_relation(m.trivialized(), IdentityId::chi_relation_classical)};
}

}  // namespace arithmat
