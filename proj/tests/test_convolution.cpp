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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "constructors.hpp"
#include "convolution.hpp"
#include "error.hpp"
#include "test_util.hpp"

using namespace arithmat;

namespace {

MultiplicityMatroid two() { return matrix_matroid({{Int(2)}}); }

MultiplicityMatroid random_table_on(const MultiplicityMatroid& base,
                                    std::mt19937_64& rng) {
  std::vector<Int> table(std::size_t(1) << base.size());
  for (Int& value : table) value = uniform_int(rng, 1, 9);
  return explicit_matroid(base.size(), base.rank_table(), table);
}

// every indexed edge variable replaced by the index-0 one
LaurentPoly collapse_indexed(LaurentPoly f) {
  for (VarId var : support_vars(f)) {
    if (!family_is_indexed(var.family) || var.index == 0) continue;
    f = substitute_monomial(f, var, 1,
                            Monomial::variable(VarId{var.family, 0}));
  }
  return f;
}

bool reports_match(const IdentityReport& collapsed,
                   const IdentityReport& univariate) {
  return collapse_indexed(collapsed.lhs) == univariate.lhs &&
         collapse_indexed(collapsed.rhs_first) == univariate.rhs_first &&
         collapse_indexed(*collapsed.rhs_second) == *univariate.rhs_second;
}

}  // namespace

TEST_CASE("product of the point with itself, multivariate") {
  const IdentityReport report = verify_product_multivariate(two(), two());
  CHECK(report.equal);
  const LaurentPoly expected =
      LaurentPoly(1) + 4 * LaurentPoly::variable(VarId::p(), -1) *
                           LaurentPoly::variable(VarId::q(), -1) *
                           LaurentPoly::variable(VarId::u(0)) *
                           LaurentPoly::variable(VarId::v(0));
  CHECK(report.lhs == expected);
  CHECK(report.rhs_first == expected);
  CHECK(*report.rhs_second == expected);
}

TEST_CASE("product of the point with itself, univariate") {
  const IdentityReport report = verify_product_univariate(two(), two());
  CHECK(report.equal);
  CHECK(canonical_string(report.lhs) == "1 + 4*q^-1*p^-1*v0*u0");
}

TEST_CASE("empty matroids reduce to the constant term") {
  const MultiplicityMatroid empty = uniform_matroid(0, 0);
  const IdentityReport report = verify_product_multivariate(empty, empty);
  CHECK(report.equal);
  CHECK(report.lhs == LaurentPoly(1));
  CHECK(verify_dupont(empty, empty).equal);
  CHECK(verify_char_convolution(empty).equal);
}

TEST_CASE("product identities on corpus-style pairs") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 6; ++trial) {
    const int height = uniform_int(rng, 1, 3);
    const int width = uniform_int(rng, 1, 4);
    std::vector<std::vector<Int>> columns(width, std::vector<Int>(height));
    for (auto& column : columns)
      for (Int& entry : column) entry = uniform_int(rng, -5, 5);
    const MultiplicityMatroid m1 = matrix_matroid(columns);
    const MultiplicityMatroid m2 = random_table_on(m1, rng);
    CHECK(verify_product_multivariate(m1, m2).equal);
    CHECK(verify_product_univariate(m1, m2).equal);
    CHECK(verify_dupont(m1, m2).equal);
    CHECK(verify_backman_lenz(m1, m2).equal);
  }
}

TEST_CASE("product factors must share the underlying matroid") {
  CHECK_THROWS_AS(
      verify_product_multivariate(uniform_matroid(1, 2), uniform_matroid(2, 2)),
      Error);
}

TEST_CASE("swap symmetry between the two right-hand sides") {
  std::mt19937_64 rng(17);
  const MultiplicityMatroid base = uniform_matroid(2, 4);
  const MultiplicityMatroid m1 = random_table_on(base, rng);
  const MultiplicityMatroid m2 = random_table_on(base, rng);
  const IdentityReport forward = verify_product_multivariate(m1, m2);
  const IdentityReport backward = verify_product_multivariate(m2, m1);
  CHECK(forward.rhs_first == *backward.rhs_second);
  CHECK(*forward.rhs_second == backward.rhs_first);
  CHECK(forward.lhs == backward.lhs);
}

TEST_CASE("collapsing the multivariate reports gives the univariate ones") {
  std::mt19937_64 rng(31415);
  const MultiplicityMatroid base = uniform_matroid(2, 4);
  const MultiplicityMatroid m1 = random_table_on(base, rng);
  const MultiplicityMatroid m2 = random_table_on(base, rng);
  CHECK(reports_match(verify_product_multivariate(m1, m2),
                      verify_product_univariate(m1, m2)));
  CHECK(reports_match(verify_single_multivariate(m1),
                      verify_single_univariate(m1)));
}

TEST_CASE("trivializing one factor specializes product to single") {
  std::mt19937_64 rng(2025);
  const MultiplicityMatroid m =
      random_table_on(uniform_matroid(2, 4), rng);
  const IdentityReport via_product =
      verify_product_multivariate(m, m.trivialized());
  const IdentityReport direct = verify_single_multivariate(m);
  CHECK(via_product.lhs == direct.lhs);
  CHECK(via_product.rhs_first == direct.rhs_first);
  CHECK(*via_product.rhs_second == *direct.rhs_second);
}

TEST_CASE("single-matroid identities on the point") {
  const IdentityReport report = verify_single_multivariate(two());
  CHECK(report.equal);
  CHECK(canonical_string(report.lhs) == "1 + 2*q^-1*p^-1*v0*u0");
  CHECK(verify_single_univariate(two()).equal);
}

TEST_CASE("single-matroid identities hold on trivial multiplicities") {
  const MultiplicityMatroid k3 = graphic_matroid(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(verify_single_multivariate(k3).equal);
  CHECK(verify_single_univariate(k3).equal);
  CHECK(verify_mixed_tutte(k3).equal);
}

TEST_CASE("dupont on the point with a trivial second factor") {
  const IdentityReport report = verify_dupont(two(), two().trivialized());
  CHECK(report.equal);
  const LaurentPoly expected = LaurentPoly::variable(VarId::a()) *
                                   LaurentPoly::variable(VarId::b()) +
                               2;
  CHECK(report.lhs == expected);
  CHECK(report.rhs_first == expected);
}

TEST_CASE("backman-lenz on the point") {
  const IdentityReport report = verify_backman_lenz(two(), two().trivialized());
  CHECK(report.equal);
  CHECK(report.lhs == LaurentPoly::variable(VarId::x()) + 1);
}

TEST_CASE("backman-lenz needs no arithmetic axioms") {
  std::mt19937_64 rng(5555);
  const MultiplicityMatroid base = uniform_matroid(2, 4);
  for (int trial = 0; trial < 5; ++trial) {
    const MultiplicityMatroid m1 = random_table_on(base, rng);
    const MultiplicityMatroid m2 = random_table_on(base, rng);
    CHECK(verify_backman_lenz(m1, m2).equal);
    CHECK(verify_product_multivariate(m1, m2).equal);
  }
}

TEST_CASE("backman-lenz with trivial factors is the classical convolution") {
  const MultiplicityMatroid k3 =
      graphic_matroid(3, {{0, 1}, {0, 2}, {1, 2}}).trivialized();
  const IdentityReport bl = verify_backman_lenz(k3, k3.trivialized());
  const IdentityReport kook = verify_classical_kook(k3);
  CHECK(bl.equal);
  CHECK(kook.equal);
  CHECK(bl.lhs == kook.lhs);
  CHECK(bl.rhs_first == kook.rhs_first);
}

TEST_CASE("mixed identity on the point") {
  const IdentityReport report = verify_mixed_tutte(two());
  CHECK(report.equal);
  CHECK(report.lhs == LaurentPoly::variable(VarId::x()) + 1);
  CHECK(verify_mixed_tutte(matrix_matroid({{Int(2), Int(0)}, {Int(0), Int(3)}}))
            .equal);
}

TEST_CASE("characteristic convolution examples") {
  const IdentityReport point = verify_char_convolution(two());
  CHECK(point.equal);
  const LaurentPoly lambda_xi = LaurentPoly::variable(VarId::lambda()) *
                                LaurentPoly::variable(VarId::xi());
  CHECK(point.lhs == lambda_xi - 2);

  const MultiplicityMatroid k3 = graphic_matroid(3, {{0, 1}, {0, 2}, {1, 2}});
  const IdentityReport triangle = verify_char_convolution(k3);
  CHECK(triangle.equal);
  CHECK(triangle.lhs == lambda_xi * lambda_xi - 3 * lambda_xi + 2);
}

TEST_CASE("classical convolution examples") {
  CHECK(verify_classical_kook(uniform_matroid(1, 1)).lhs ==
        LaurentPoly::variable(VarId::x()));
  const MultiplicityMatroid k3 = graphic_matroid(3, {{0, 1}, {0, 2}, {1, 2}});
  const IdentityReport report = verify_classical_kook(k3);
  CHECK(report.equal);
  CHECK(report.lhs == arithmat::testing::oracle_tutte(k3, false));
  CHECK_FALSE(report.rhs_second.has_value());
  CHECK(verify_classical_kook(uniform_matroid(2, 4)).equal);
}

TEST_CASE("point checks agree with the symbolic verdicts") {
  std::mt19937_64 seeds(8088);
  const MultiplicityMatroid base = uniform_matroid(2, 4);
  const MultiplicityMatroid m1 = random_table_on(base, seeds);
  const MultiplicityMatroid m2 = random_table_on(base, seeds);
  std::mt19937_64 rng(777);
  using Id = IdentityId;
  for (Id id : {Id::product_multivariate, Id::product_univariate,
                Id::dupont_abcd, Id::backman_lenz}) {
    CHECK(verify_identity(id, m1, &m2).equal);
    for (int trial = 0; trial < 3; ++trial)
      CHECK(identity_point_check(id, m1, &m2, rng));
  }
  for (Id id : {Id::single_multivariate, Id::single_univariate,
                Id::mixed_tutte, Id::char_convolution, Id::classical_kook}) {
    CHECK(verify_identity(id, m1).equal);
    for (int trial = 0; trial < 3; ++trial)
      CHECK(identity_point_check(id, m1, nullptr, rng));
  }
}

TEST_CASE("probabilistic mode reports point trials") {
  VerifyOptions options;
  options.mode = VerifyMode::probabilistic;
  const IdentityReport report =
      verify_char_convolution(uniform_matroid(2, 4), options);
  CHECK(report.equal);
  CHECK(report.probabilistic);
  CHECK(report.points == 3);
  CHECK(report.lhs.is_zero());  // no polynomials in fast mode
}

TEST_CASE("automatic mode goes probabilistic above the symbolic limit") {
  VerifyOptions options;
  options.symbolic_limit = 3;
  const IdentityReport report =
      verify_classical_kook(uniform_matroid(2, 4), options);
  CHECK(report.probabilistic);
  CHECK(report.equal);
  CHECK_FALSE(verify_classical_kook(uniform_matroid(2, 3), options).probabilistic);
}

TEST_CASE("verify_identity defaults the second factor to trivial") {
  const IdentityReport defaulted =
      verify_identity(IdentityId::product_multivariate, two());
  const IdentityReport explicit_second = verify_product_multivariate(
      two(), two().trivialized());
  CHECK(defaulted.lhs == explicit_second.lhs);
  CHECK(defaulted.rhs_first == explicit_second.rhs_first);
}

TEST_CASE("default corpus is deterministic and covers the suites") {
  const Corpus a = build_default_corpus(42);
  const Corpus b = build_default_corpus(42);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].name == b.entries[i].name);
    CHECK(a.entries[i].first == b.entries[i].first);
    CHECK(a.entries[i].second == b.entries[i].second);
  }
  int singles = 0, pairs = 0;
  for (const CorpusEntry& entry : a.entries)
    entry.second ? ++pairs : ++singles;
  CHECK(singles == 21 + 2 + 25 + 10);
  CHECK(pairs == 15);
  CHECK(build_default_corpus(43).entries.size() == a.entries.size());
}

TEST_CASE("verify_all passes on the default corpus and isolates errors") {
  Corpus corpus = build_default_corpus(42);
  const AggregateReport clean = verify_all(corpus);
  CHECK(clean.pass);
  for (const AggregateEntry& entry : clean.entries)
    CHECK_FALSE(entry.error.has_value());

  // a pair whose second factor does not share the underlying matroid
  CorpusEntry bad;
  bad.name = "mismatched";
  bad.first = corpus.entries[0].first;  // U_{0,0}
  MatroidSpec wrong;
  wrong.kind = MatroidSpec::Kind::uniform;
  wrong.rank = 1;
  wrong.size = 1;
  bad.second = wrong;
  corpus.entries.insert(corpus.entries.begin(), bad);
  const AggregateReport mixed = verify_all(corpus);
  CHECK_FALSE(mixed.pass);
  REQUIRE(mixed.entries.size() == clean.entries.size() + 1);
  CHECK(mixed.entries[0].error.has_value());
  for (std::size_t i = 1; i < mixed.entries.size(); ++i)
    CHECK_FALSE(mixed.entries[i].error.has_value());

  CHECK(verify_all(Corpus{}).pass);  // empty corpus succeeds
}
