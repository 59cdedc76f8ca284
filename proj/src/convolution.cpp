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

#include "convolution.hpp"

#include <chrono>
#include <map>

#include "error.hpp"
#include "rand_util.hpp"

namespace arithmat {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_millis(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

bool use_symbolic(int ground_size, const VerifyOptions& options) {
  switch (options.mode) {
    case VerifyMode::symbolic:
      return true;
    case VerifyMode::probabilistic:
      return false;
    case VerifyMode::automatic:
      return ground_size <= options.symbolic_limit;
  }
  return true;
}

std::mt19937_64 point_rng(const VerifyOptions& options, IdentityId id) {
  return std::mt19937_64(options.point_seed ^
                         (0x9e3779b97f4a7c15ull *
                          (static_cast<std::uint64_t>(id) + 1)));
}

// ---- symbolic right-hand sides ------------------------------------------

// sum over T of p^-rk(T) prod_{e in T}(-u_e) Z(a|T; q,-v) Z(b/T; p,u)
LaurentPoly product_rhs(const MultiplicityMatroid& a,
                        const MultiplicityMatroid& b) {
  LaurentPoly total;
  for (SubsetMask t = 0; t <= a.full_set(); ++t) {
    Monomial prefactor = Monomial::variable(VarId::p(), -a.rank(t));
    for (int e : mask_elements(t))
      prefactor = prefactor.times(Monomial::variable(VarId::u(a.label(e))));
    const Int sign = (subset_size(t) & 1) ? -1 : 1;
    total += LaurentPoly::term(sign, prefactor) *
             multivariate_Z(restriction(a, t), QVar::q, VVar::v, -1) *
             multivariate_Z(contraction(b, t), QVar::p, VVar::u, +1);
  }
  return total;
}

// collapsed version: sum over T of p^-rk(T) (-u)^|T| Z(a|T; q,-v) Z(b/T; p,u)
LaurentPoly product_rhs_univariate(const MultiplicityMatroid& a,
                                   const MultiplicityMatroid& b) {
  LaurentPoly total;
  for (SubsetMask t = 0; t <= a.full_set(); ++t) {
    const int k = subset_size(t);
    Monomial prefactor = Monomial::variable(VarId::p(), -a.rank(t))
                             .times(Monomial::variable(VarId::u(0), k));
    const Int sign = (k & 1) ? -1 : 1;
    total += LaurentPoly::term(sign, prefactor) *
             univariate_Z(restriction(a, t), QVar::q, VVar::v, -1) *
             univariate_Z(contraction(b, t), QVar::p, VVar::u, +1);
  }
  return total;
}

// sum over A of a^(rk(X)-rk(A)) (-d)^(|A|-rk(A))
//              M(m1|A; 1-a,1-c) M(m2/A; 1+b,1+d)
LaurentPoly dupont_rhs(const MultiplicityMatroid& m1,
                       const MultiplicityMatroid& m2) {
  const LaurentPoly one_minus_a = LaurentPoly(1) - LaurentPoly::variable(VarId::a());
  const LaurentPoly one_minus_c = LaurentPoly(1) - LaurentPoly::variable(VarId::c());
  const LaurentPoly one_plus_b = LaurentPoly(1) + LaurentPoly::variable(VarId::b());
  const LaurentPoly one_plus_d = LaurentPoly(1) + LaurentPoly::variable(VarId::d());
  const int full_rank = m1.full_rank();
  LaurentPoly total;
  for (SubsetMask a = 0; a <= m1.full_set(); ++a) {
    const int corank = full_rank - m1.rank(a);
    const int nullity = subset_size(a) - m1.rank(a);
    Monomial prefactor = Monomial::variable(VarId::a(), corank)
                             .times(Monomial::variable(VarId::d(), nullity));
    const Int sign = (nullity & 1) ? -1 : 1;
    LaurentPoly restricted = arithmetic_tutte(restriction(m1, a));
    restricted = substitute_poly(restricted, VarId::x(), one_minus_a);
    restricted = substitute_poly(restricted, VarId::y(), one_minus_c);
    LaurentPoly contracted = arithmetic_tutte(contraction(m2, a));
    contracted = substitute_poly(contracted, VarId::x(), one_plus_b);
    contracted = substitute_poly(contracted, VarId::y(), one_plus_d);
    total += LaurentPoly::term(sign, prefactor) * restricted * contracted;
  }
  return total;
}

// sum over A of M(m1|A; 0,y) M(m2/A; x,0); with both multiplicities
// trivial this is the classical convolution sum.
LaurentPoly corank_nullity_rhs(const MultiplicityMatroid& m1,
                               const MultiplicityMatroid& m2) {
  LaurentPoly total;
  for (SubsetMask a = 0; a <= m1.full_set(); ++a) {
    const LaurentPoly restricted =
        partial_eval(arithmetic_tutte(restriction(m1, a)), VarId::x(), 0);
    const LaurentPoly contracted =
        partial_eval(arithmetic_tutte(contraction(m2, a)), VarId::y(), 0);
    total += restricted * contracted;
  }
  return total;
}

// sum over A of lambda^(rk(X)-rk(A)) chi(m1|A; lambda) chi(m2/A; xi)
LaurentPoly characteristic_rhs(const MultiplicityMatroid& m1,
                               const MultiplicityMatroid& m2) {
  const int full_rank = m1.full_rank();
  LaurentPoly total;
  for (SubsetMask a = 0; a <= m1.full_set(); ++a) {
    total += LaurentPoly::variable(VarId::lambda(), full_rank - m1.rank(a)) *
             characteristic(restriction(m1, a), VarId::lambda()) *
             characteristic(contraction(m2, a), VarId::xi());
  }
  return total;
}

// ---- point-evaluation twins ---------------------------------------------
//
// These mirror the defining subset sums with exact rational arithmetic
// and never touch the polynomial engine; the probabilistic fast mode and
// the test suite use them as an independent route.

using PointMap = std::map<int, Rational>;  // keyed by element label

Rational eval_Z_at(const MultiplicityMatroid& m, const Rational& q0,
                   const PointMap& v0, int sign) {
  Rational total = 0;
  for (SubsetMask a = 0; a <= m.full_set(); ++a) {
    Rational term = Rational(m.multiplicity(a)) * rpow(q0, -m.rank(a));
    for (int e : mask_elements(a)) {
      term *= v0.at(m.label(e));
      if (sign < 0) term = -term;
    }
    total += term;
  }
  return total;
}

Rational eval_tutte_at(const MultiplicityMatroid& m, const Rational& x0,
                       const Rational& y0, bool weighted) {
  const int full_rank = m.full_rank();
  Rational total = 0;
  for (SubsetMask a = 0; a <= m.full_set(); ++a) {
    Rational term = weighted ? Rational(m.multiplicity(a)) : Rational(1);
    term *= rpow(x0 - 1, full_rank - m.rank(a));
    term *= rpow(y0 - 1, subset_size(a) - m.rank(a));
    total += term;
  }
  return total;
}

Rational eval_characteristic_at(const MultiplicityMatroid& m,
                                const Rational& l0, bool weighted) {
  const int full_rank = m.full_rank();
  Rational total = 0;
  for (SubsetMask a = 0; a <= m.full_set(); ++a) {
    Rational term = weighted ? Rational(m.multiplicity(a)) : Rational(1);
    if (subset_size(a) & 1) term = -term;
    total += term * rpow(l0, full_rank - m.rank(a));
  }
  return total;
}

PointMap sample_point_map(const MultiplicityMatroid& m, std::mt19937_64& rng) {
  PointMap out;
  for (int e = 0; e < m.size(); ++e)
    out[m.label(e)] = sample_nonzero_rational(rng);
  return out;
}

PointMap negated(PointMap values) {
  for (auto& [label, value] : values) value = -value;
  return values;
}

PointMap pointwise_product(const PointMap& a, const PointMap& b) {
  PointMap out = a;
  for (auto& [label, value] : out) value *= b.at(label);
  return out;
}

bool point_check_product(const MultiplicityMatroid& m1,
                         const MultiplicityMatroid& m2, std::mt19937_64& rng,
                         bool collapsed) {
  const MultiplicityMatroid prod = product(m1, m2);
  const Rational p0 = sample_nonzero_rational(rng);
  const Rational q0 = sample_nonzero_rational(rng);
  PointMap u0, v0;
  if (collapsed) {
    const Rational shared_u = sample_nonzero_rational(rng);
    const Rational shared_v = sample_nonzero_rational(rng);
    for (int e = 0; e < prod.size(); ++e) {
      u0[prod.label(e)] = shared_u;
      v0[prod.label(e)] = shared_v;
    }
  } else {
    u0 = sample_point_map(prod, rng);
    v0 = sample_point_map(prod, rng);
  }
  const Rational lhs = eval_Z_at(prod, p0 * q0, pointwise_product(u0, v0), +1);
  const auto rhs = [&](const MultiplicityMatroid& a,
                       const MultiplicityMatroid& b) {
    Rational total = 0;
    for (SubsetMask t = 0; t <= a.full_set(); ++t) {
      Rational prefactor = rpow(p0, -a.rank(t));
      for (int e : mask_elements(t)) prefactor *= -u0.at(a.label(e));
      total += prefactor * eval_Z_at(restriction(a, t), q0, v0, -1) *
               eval_Z_at(contraction(b, t), p0, u0, +1);
    }
    return total;
  };
  return lhs == rhs(m1, m2) && lhs == rhs(m2, m1);
}

bool point_check_dupont(const MultiplicityMatroid& m1,
                        const MultiplicityMatroid& m2, std::mt19937_64& rng) {
  const MultiplicityMatroid prod = product(m1, m2);
  const Rational a0 = sample_nonzero_rational(rng);
  const Rational b0 = sample_nonzero_rational(rng);
  const Rational c0 = sample_nonzero_rational(rng);
  const Rational d0 = sample_nonzero_rational(rng);
  const Rational lhs = eval_tutte_at(prod, 1 + a0 * b0, 1 + c0 * d0, true);
  const int full_rank = prod.full_rank();
  const auto rhs = [&](const MultiplicityMatroid& first,
                       const MultiplicityMatroid& second) {
    Rational total = 0;
    for (SubsetMask a = 0; a <= first.full_set(); ++a) {
      const Rational prefactor =
          rpow(a0, full_rank - first.rank(a)) *
          rpow(-d0, subset_size(a) - first.rank(a));
      total += prefactor *
               eval_tutte_at(restriction(first, a), 1 - a0, 1 - c0, true) *
               eval_tutte_at(contraction(second, a), 1 + b0, 1 + d0, true);
    }
    return total;
  };
  return lhs == rhs(m1, m2) && lhs == rhs(m2, m1);
}

bool point_check_corank_nullity(const MultiplicityMatroid& m1,
                                const MultiplicityMatroid& m2,
                                std::mt19937_64& rng, bool swapped_too) {
  const MultiplicityMatroid prod = product(m1, m2);
  const Rational x0 = sample_nonzero_rational(rng);
  const Rational y0 = sample_nonzero_rational(rng);
  const Rational lhs = eval_tutte_at(prod, x0, y0, true);
  const auto rhs = [&](const MultiplicityMatroid& first,
                       const MultiplicityMatroid& second) {
    Rational total = 0;
    for (SubsetMask a = 0; a <= first.full_set(); ++a)
      total += eval_tutte_at(restriction(first, a), 0, y0, true) *
               eval_tutte_at(contraction(second, a), x0, 0, true);
    return total;
  };
  if (lhs != rhs(m1, m2)) return false;
  if (!swapped_too) return true;
  return lhs == rhs(m2, m1);
}

bool point_check_characteristic(const MultiplicityMatroid& m,
                                std::mt19937_64& rng) {
  const Rational l0 = sample_nonzero_rational(rng);
  const Rational s0 = sample_nonzero_rational(rng);
  const Rational lhs = eval_characteristic_at(m, l0 * s0, true);
  const int full_rank = m.full_rank();
  const auto rhs = [&](bool restricted_weighted) {
    Rational total = 0;
    for (SubsetMask a = 0; a <= m.full_set(); ++a)
      total += rpow(l0, full_rank - m.rank(a)) *
               eval_characteristic_at(restriction(m, a), l0,
                                      restricted_weighted) *
               eval_characteristic_at(contraction(m, a), s0,
                                      !restricted_weighted);
    return total;
  };
  return lhs == rhs(true) && lhs == rhs(false);
}

// ---- report assembly ------------------------------------------------------

template <typename Symbolic, typename PointCheck>
IdentityReport run_identity(IdentityId id, int ground_size,
                            const VerifyOptions& options, Symbolic&& symbolic,
                            PointCheck&& point_check) {
  const auto start = Clock::now();
  IdentityReport report;
  report.id = id;
  if (use_symbolic(ground_size, options)) {
    symbolic(report);
    report.equal = report.lhs == report.rhs_first &&
                   (!report.rhs_second || report.lhs == *report.rhs_second);
  } else {
    report.probabilistic = true;
    report.points = options.probabilistic_points;
    auto rng = point_rng(options, id);
    report.equal = true;
    for (int i = 0; i < options.probabilistic_points; ++i)
      if (!point_check(rng)) report.equal = false;
  }
  report.millis = elapsed_millis(start);
  return report;
}

LaurentPoly product_lhs_multivariate(const MultiplicityMatroid& prod) {
  LaurentPoly lhs = multivariate_Z(prod);
  lhs = substitute_monomial(
      lhs, VarId::q(), 1,
      Monomial::variable(VarId::p()).times(Monomial::variable(VarId::q())));
  for (int e = 0; e < prod.size(); ++e) {
    const int label = prod.label(e);
    lhs = substitute_monomial(lhs, VarId::v(label), 1,
                              Monomial::variable(VarId::u(label))
                                  .times(Monomial::variable(VarId::v(label))));
  }
  return lhs;
}

// Z(pq, uv) in the collapsed variables, built directly from the tables.
LaurentPoly product_lhs_univariate(const MultiplicityMatroid& prod) {
  LaurentPoly lhs;
  for (SubsetMask a = 0; a <= prod.full_set(); ++a) {
    const int k = subset_size(a);
    Monomial mono = Monomial::variable(VarId::p(), -prod.rank(a))
                        .times(Monomial::variable(VarId::q(), -prod.rank(a)))
                        .times(Monomial::variable(VarId::u(0), k))
                        .times(Monomial::variable(VarId::v(0), k));
    lhs.add_term(mono, prod.multiplicity(a));
  }
  return lhs;
}

}  // namespace

IdentityReport verify_product_multivariate(const MultiplicityMatroid& m1,
                                           const MultiplicityMatroid& m2,
                                           const VerifyOptions& options) {
  const MultiplicityMatroid prod = product(m1, m2);
  return run_identity(
      IdentityId::product_multivariate, prod.size(), options,
      [&](IdentityReport& report) {
        report.lhs = product_lhs_multivariate(prod);
        report.rhs_first = product_rhs(m1, m2);
        report.rhs_second = product_rhs(m2, m1);
      },
      [&](std::mt19937_64& rng) {
        return point_check_product(m1, m2, rng, false);
      });
}

IdentityReport verify_product_univariate(const MultiplicityMatroid& m1,
                                         const MultiplicityMatroid& m2,
                                         const VerifyOptions& options) {
  const MultiplicityMatroid prod = product(m1, m2);
  return run_identity(
      IdentityId::product_univariate, prod.size(), options,
      [&](IdentityReport& report) {
        report.lhs = product_lhs_univariate(prod);
        report.rhs_first = product_rhs_univariate(m1, m2);
        report.rhs_second = product_rhs_univariate(m2, m1);
      },
      [&](std::mt19937_64& rng) {
        return point_check_product(m1, m2, rng, true);
      });
}

IdentityReport verify_single_multivariate(const MultiplicityMatroid& m,
                                          const VerifyOptions& options) {
  const MultiplicityMatroid trivial = m.trivialized();
  return run_identity(
      IdentityId::single_multivariate, m.size(), options,
      [&](IdentityReport& report) {
        report.lhs = product_lhs_multivariate(m);
        report.rhs_first = product_rhs(m, trivial);
        report.rhs_second = product_rhs(trivial, m);
      },
      [&](std::mt19937_64& rng) {
        return point_check_product(m, trivial, rng, false);
      });
}

IdentityReport verify_single_univariate(const MultiplicityMatroid& m,
                                        const VerifyOptions& options) {
  const MultiplicityMatroid trivial = m.trivialized();
  return run_identity(
      IdentityId::single_univariate, m.size(), options,
      [&](IdentityReport& report) {
        report.lhs = product_lhs_univariate(m);
        report.rhs_first = product_rhs_univariate(m, trivial);
        report.rhs_second = product_rhs_univariate(trivial, m);
      },
      [&](std::mt19937_64& rng) {
        return point_check_product(m, trivial, rng, true);
      });
}

IdentityReport verify_dupont(const MultiplicityMatroid& m1,
                             const MultiplicityMatroid& m2,
                             const VerifyOptions& options) {
  const MultiplicityMatroid prod = product(m1, m2);
  return run_identity(
      IdentityId::dupont_abcd, prod.size(), options,
      [&](IdentityReport& report) {
        LaurentPoly lhs = arithmetic_tutte(prod);
        lhs = substitute_poly(lhs, VarId::x(),
                              LaurentPoly(1) +
                                  LaurentPoly::variable(VarId::a()) *
                                      LaurentPoly::variable(VarId::b()));
        lhs = substitute_poly(lhs, VarId::y(),
                              LaurentPoly(1) +
                                  LaurentPoly::variable(VarId::c()) *
                                      LaurentPoly::variable(VarId::d()));
        report.lhs = lhs;
        report.rhs_first = dupont_rhs(m1, m2);
        report.rhs_second = dupont_rhs(m2, m1);
      },
      [&](std::mt19937_64& rng) { return point_check_dupont(m1, m2, rng); });
}

IdentityReport verify_backman_lenz(const MultiplicityMatroid& m1,
                                   const MultiplicityMatroid& m2,
                                   const VerifyOptions& options) {
  const MultiplicityMatroid prod = product(m1, m2);
  return run_identity(
      IdentityId::backman_lenz, prod.size(), options,
      [&](IdentityReport& report) {
        report.lhs = arithmetic_tutte(prod);
        report.rhs_first = corank_nullity_rhs(m1, m2);
        report.rhs_second = corank_nullity_rhs(m2, m1);
      },
      [&](std::mt19937_64& rng) {
        return point_check_corank_nullity(m1, m2, rng, true);
      });
}

IdentityReport verify_mixed_tutte(const MultiplicityMatroid& m,
                                  const VerifyOptions& options) {
  const MultiplicityMatroid trivial = m.trivialized();
  return run_identity(
      IdentityId::mixed_tutte, m.size(), options,
      [&](IdentityReport& report) {
        report.lhs = arithmetic_tutte(m);
        report.rhs_first = corank_nullity_rhs(m, trivial);
        report.rhs_second = corank_nullity_rhs(trivial, m);
      },
      [&](std::mt19937_64& rng) {
        return point_check_corank_nullity(m, trivial, rng, true);
      });
}

IdentityReport verify_char_convolution(const MultiplicityMatroid& m,
                                       const VerifyOptions& options) {
  return run_identity(
      IdentityId::char_convolution, m.size(), options,
      [&](IdentityReport& report) {
        report.lhs = substitute_monomial(
            characteristic(m), VarId::lambda(), 1,
            Monomial::variable(VarId::lambda())
                .times(Monomial::variable(VarId::xi())));
        report.rhs_first = characteristic_rhs(m, m.trivialized());
        report.rhs_second = characteristic_rhs(m.trivialized(), m);
      },
      [&](std::mt19937_64& rng) {
        return point_check_characteristic(m, rng);
      });
}

IdentityReport verify_classical_kook(const MultiplicityMatroid& m,
                                     const VerifyOptions& options) {
  const MultiplicityMatroid trivial = m.trivialized();
  return run_identity(
      IdentityId::classical_kook, m.size(), options,
      [&](IdentityReport& report) {
        report.lhs = classical_tutte(m);
        report.rhs_first = corank_nullity_rhs(trivial, trivial);
      },
      [&](std::mt19937_64& rng) {
        return point_check_corank_nullity(trivial, trivial, rng, false);
      });
}

bool identity_needs_pair(IdentityId id) {
  switch (id) {
    case IdentityId::product_multivariate:
    case IdentityId::product_univariate:
    case IdentityId::dupont_abcd:
    case IdentityId::backman_lenz:
      return true;
    default:
      return false;
  }
}

IdentityReport verify_identity(IdentityId id, const MultiplicityMatroid& m1,
                               const MultiplicityMatroid* m2,
                               const VerifyOptions& options) {
  if (identity_needs_pair(id)) {
    const MultiplicityMatroid second = m2 ? *m2 : m1.trivialized();
    switch (id) {
      case IdentityId::product_multivariate:
        return verify_product_multivariate(m1, second, options);
      case IdentityId::product_univariate:
        return verify_product_univariate(m1, second, options);
      case IdentityId::dupont_abcd:
        return verify_dupont(m1, second, options);
      default:
        return verify_backman_lenz(m1, second, options);
    }
  }
  // single-matroid identities: a provided second factor means the
  // subject is the product
  const MultiplicityMatroid subject = m2 ? product(m1, *m2) : m1;
  switch (id) {
    case IdentityId::single_multivariate:
      return verify_single_multivariate(subject, options);
    case IdentityId::single_univariate:
      return verify_single_univariate(subject, options);
    case IdentityId::mixed_tutte:
      return verify_mixed_tutte(subject, options);
    case IdentityId::char_convolution:
      return verify_char_convolution(subject, options);
    case IdentityId::classical_kook:
      return verify_classical_kook(subject, options);
    default:
      throw Error(ErrorCode::invalid_argument,
                  std::string("not a convolution identity: ") +
                      identity_token(id));
  }
}

bool identity_point_check(IdentityId id, const MultiplicityMatroid& m1,
                          const MultiplicityMatroid* m2,
                          std::mt19937_64& rng) {
  if (identity_needs_pair(id)) {
    const MultiplicityMatroid second = m2 ? *m2 : m1.trivialized();
    switch (id) {
      case IdentityId::product_multivariate:
        return point_check_product(m1, second, rng, false);
      case IdentityId::product_univariate:
        return point_check_product(m1, second, rng, true);
      case IdentityId::dupont_abcd:
        return point_check_dupont(m1, second, rng);
      default:
        return point_check_corank_nullity(m1, second, rng, true);
    }
  }
  const MultiplicityMatroid subject = m2 ? product(m1, *m2) : m1;
  const MultiplicityMatroid trivial = subject.trivialized();
  switch (id) {
    case IdentityId::single_multivariate:
      return point_check_product(subject, trivial, rng, false);
    case IdentityId::single_univariate:
      return point_check_product(subject, trivial, rng, true);
    case IdentityId::mixed_tutte:
      return point_check_corank_nullity(subject, trivial, rng, true);
    case IdentityId::char_convolution:
      return point_check_characteristic(subject, rng);
    case IdentityId::classical_kook:
      return point_check_corank_nullity(trivial, trivial, rng, false);
    default:
      throw Error(ErrorCode::invalid_argument,
                  std::string("not a convolution identity: ") +
                      identity_token(id));
  }
}

// ---- corpus ---------------------------------------------------------------

namespace {

MatroidSpec uniform_spec(int rank, int size) {
  MatroidSpec spec;
  spec.kind = MatroidSpec::Kind::uniform;
  spec.rank = rank;
  spec.size = size;
  return spec;
}

MatroidSpec complete_graph_spec(int vertices) {
  MatroidSpec spec;
  spec.kind = MatroidSpec::Kind::graphic;
  spec.vertices = vertices;
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j) spec.edges.push_back({i, j});
  return spec;
}

MatroidSpec random_matrix_spec(std::mt19937_64& rng) {
  MatroidSpec spec;
  spec.kind = MatroidSpec::Kind::matrix;
  const int height = uniform_int(rng, 1, 4);
  const int width = uniform_int(rng, 1, 6);
  spec.columns.assign(width, std::vector<Int>(height));
  for (int j = 0; j < width; ++j)
    for (int i = 0; i < height; ++i)
      spec.columns[j][i] = uniform_int(rng, -5, 5);
  return spec;
}

std::vector<Int> random_multiplicity_table(std::mt19937_64& rng, int size) {
  std::vector<Int> table(std::size_t(1) << size);
  for (Int& value : table) value = uniform_int(rng, 1, 9);
  return table;
}

}  // namespace

Corpus build_default_corpus(std::uint64_t seed, int max_n) {
  Corpus corpus;
  corpus.seed = seed;
  std::mt19937_64 rng(seed);
  const auto add = [&](CorpusEntry entry) {
    if (entry.first.ground_size() <= max_n)
      corpus.entries.push_back(std::move(entry));
  };

  for (int size = 0; size <= 5; ++size)
    for (int rank = 0; rank <= size; ++rank)
      add({"uniform(" + std::to_string(rank) + "," + std::to_string(size) + ")",
           uniform_spec(rank, size), std::nullopt});

  add({"graphic(K3)", complete_graph_spec(3), std::nullopt});
  add({"graphic(K4)", complete_graph_spec(4), std::nullopt});

  for (int i = 0; i < 25; ++i)
    add({"matrix[" + std::to_string(i) + "]", random_matrix_spec(rng),
         std::nullopt});

  for (int i = 0; i < 10; ++i) {
    MatroidSpec spec = uniform_spec(2, 4);
    spec.multiplicity = random_multiplicity_table(rng, 4);
    add({"table-on-U24[" + std::to_string(i) + "]", std::move(spec),
         std::nullopt});
  }

  for (int i = 0; i < 15; ++i) {
    MatroidSpec first = random_matrix_spec(rng);
    const MultiplicityMatroid built = build_matroid(first);
    MatroidSpec second;
    second.kind = MatroidSpec::Kind::explicit_table;
    second.size = built.size();
    second.rank_table = built.rank_table();
    second.multiplicity = random_multiplicity_table(rng, built.size());
    add({"pair[" + std::to_string(i) + "]", std::move(first),
         std::move(second)});
  }
  return corpus;
}

AggregateReport verify_all(const Corpus& corpus, const VerifyOptions& options) {
  static constexpr IdentityId kSingleSuite[] = {
      IdentityId::single_multivariate, IdentityId::single_univariate,
      IdentityId::mixed_tutte, IdentityId::char_convolution,
      IdentityId::classical_kook};
  static constexpr IdentityId kPairSuite[] = {
      IdentityId::product_multivariate, IdentityId::product_univariate,
      IdentityId::dupont_abcd, IdentityId::backman_lenz};

  AggregateReport aggregate;
  aggregate.pass = true;
  for (const CorpusEntry& entry : corpus.entries) {
    AggregateEntry result;
    result.entry = entry.name;
    try {
      const MultiplicityMatroid m1 = build_matroid(entry.first);
      if (entry.second) {
        const MultiplicityMatroid m2 = build_matroid(*entry.second);
        for (IdentityId id : kPairSuite)
          result.reports.push_back(verify_identity(id, m1, &m2, options));
      } else {
        for (IdentityId id : kSingleSuite)
          result.reports.push_back(verify_identity(id, m1, nullptr, options));
      }
      for (const IdentityReport& report : result.reports)
        if (!report.equal) aggregate.pass = false;
    } catch (const Error& error) {
      result.error = error.what();
      aggregate.pass = false;
    }
    aggregate.entries.push_back(std::move(result));
  }
  return aggregate;
}

}  // namespace arithmat
