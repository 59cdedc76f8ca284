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

#ifndef ARITHMAT_TUTTE_HPP
#define ARITHMAT_TUTTE_HPP

// The polynomial families attached to a multiplicity matroid, computed
// from their defining subset sums, together with the change-of-variable
// relation checks between them.

#include <optional>
#include <string>
#include <utility>

#include "matroid.hpp"
#include "poly.hpp"

namespace arithmat {

enum class QVar { q, p };
enum class VVar { v, u };

inline VarId qvar_id(QVar choice) {
  return choice == QVar::q ? VarId::q() : VarId::p();
}
inline VarId vvar_id(VVar choice, int element) {
  return choice == VVar::v ? VarId::v(element) : VarId::u(element);
}

// Z(q, v) = sum over subsets A of m(A) q^-rk(A) prod_{e in A} (sign*v_e),
// with the q/p and v/u variable families selectable and the per-element
// variables indexed by the matroid's element labels.
LaurentPoly multivariate_Z(const MultiplicityMatroid& m, QVar qvar = QVar::q,
                           VVar vvar = VVar::v, int sign = +1);

// Collapsed form with a single edge variable: sum of
// m(A) q^-rk(A) (sign*w)^|A| where w is v0 or u0.
LaurentPoly univariate_Z(const MultiplicityMatroid& m, QVar qvar = QVar::q,
                         VVar vvar = VVar::v, int sign = +1);

// M(x, y) = sum of m(A) (x-1)^(rk(X)-rk(A)) (y-1)^(|A|-rk(A)).
LaurentPoly arithmetic_tutte(const MultiplicityMatroid& m);

// Same corank-nullity sum with the multiplicity ignored.
LaurentPoly classical_tutte(const MultiplicityMatroid& m);

// chi(var) = sum of (-1)^|A| m(A) var^(rk(X)-rk(A)).
LaurentPoly characteristic(const MultiplicityMatroid& m,
                           VarId var = VarId::lambda());

enum class PolyKind { sokal_z, arithmetic_z, tutte, arithmetic_tutte, characteristic };

LaurentPoly compute_poly(const MultiplicityMatroid& m, PolyKind kind,
                         QVar qvar = QVar::q, VVar vvar = VVar::v);

enum class IdentityId {
  product_multivariate,
  product_univariate,
  single_multivariate,
  single_univariate,
  dupont_abcd,
  backman_lenz,
  mixed_tutte,
  char_convolution,
  classical_kook,
  // relation checks, reported through the same structure
  z_to_m_relation,
  chi_relation_arithmetic,
  chi_relation_classical,
};

const char* identity_token(IdentityId id);

struct IdentityReport {
  IdentityId id = IdentityId::classical_kook;
  bool equal = false;
  // symbolic comparison (the default): both sides as canonical polynomials
  LaurentPoly lhs;
  LaurentPoly rhs_first;
  std::optional<LaurentPoly> rhs_second;
  // probabilistic fast mode: sides compared at sampled rational points
  bool probabilistic = false;
  int points = 0;
  double millis = 0.0;
};

// M(x,y) rebuilt termwise from the terms of Z(q,v) -- each term
// m(A) q^-rk(A) prod v_e becomes m(A)(x-1)^(rk(X)-rk(A))(y-1)^(|A|-rk(A))
// -- and compared against the direct corank-nullity sum.
IdentityReport check_Z_to_M_relation(const MultiplicityMatroid& m);

// chi(lambda) vs lambda^rk(X) Z(lambda, -1), once with the matroid's own
// multiplicity and once with the trivial one.
std::pair<IdentityReport, IdentityReport> check_chi_relations(
    const MultiplicityMatroid& m);

}  // namespace arithmat

#endif  // ARITHMAT_TUTTE_HPP
