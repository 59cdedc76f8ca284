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
#include "error.hpp"
#include "matroid.hpp"
#include "rand_util.hpp"

using namespace arithmat;

namespace {

MultiplicityMatroid two_by_two_diagonal() {
  return matrix_matroid({{Int(2), Int(0)}, {Int(0), Int(3)}});
}

MultiplicityMatroid random_matrix(std::mt19937_64& rng) {
  const int height = uniform_int(rng, 1, 4);
  const int width = uniform_int(rng, 1, 5);
  std::vector<std::vector<Int>> columns(width, std::vector<Int>(height));
  for (auto& column : columns)
    for (Int& entry : column) entry = uniform_int(rng, -5, 5);
  return matrix_matroid(columns);
}

}  // namespace

TEST_CASE("rank lookups") {
  const MultiplicityMatroid u24 = uniform_matroid(2, 4);
  CHECK(u24.rank(0) == 0);
  CHECK(u24.rank(0b0111) == 2);
  const MultiplicityMatroid two = matrix_matroid({{Int(2)}});
  CHECK(two.rank(0b1) == 1);
  CHECK(two.multiplicity(0b1) == 2);
}

TEST_CASE("dual rank formula") {
  const MultiplicityMatroid u12 = uniform_matroid(1, 2);
  CHECK(u12.dual_rank(0) == 0);
  CHECK(u12.dual_rank(0b01) == 1 + 1 - 1);
  CHECK(u12.dual_rank(0b11) == 2 - 1);
}

TEST_CASE("restriction keeps tables and labels") {
  const MultiplicityMatroid m = two_by_two_diagonal();
  const MultiplicityMatroid whole = restriction(m, m.full_set());
  CHECK(whole == m);
  const MultiplicityMatroid empty = restriction(m, 0);
  CHECK(empty.size() == 0);
  CHECK(empty.multiplicity(0) == 1);
  const MultiplicityMatroid first = restriction(m, 0b01);
  CHECK(first.rank(0b1) == 1);
  CHECK(first.multiplicity(0b1) == 2);
  CHECK(first.labels() == std::vector<int>{0});
  const MultiplicityMatroid second = restriction(m, 0b10);
  CHECK(second.labels() == std::vector<int>{1});
  CHECK(second.multiplicity(0b1) == 3);
}

TEST_CASE("contraction applies both defining formulas") {
  const MultiplicityMatroid m = two_by_two_diagonal();
  CHECK(contraction(m, 0) == m);
  const MultiplicityMatroid by_first = contraction(m, 0b01);
  CHECK(by_first.multiplicity(0) == 2);  // m(A u T) with A empty
  CHECK(by_first.labels() == std::vector<int>{1});
  const MultiplicityMatroid u12 = uniform_matroid(1, 2);
  CHECK(contraction(u12, 0b01).rank(0b1) == 0);  // element 1 becomes a loop
}

TEST_CASE("minors commute") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 15; ++trial) {
    const MultiplicityMatroid m = random_matrix(rng);
    const SubsetMask t =
        SubsetMask(uniform_int(rng, 0, static_cast<int>(m.full_set())));
    const SubsetMask rest = m.full_set() & ~t;
    const SubsetMask s_original =
        expand_mask(SubsetMask(uniform_int(
                        rng, 0, (1 << subset_size(rest)) - 1)),
                    rest);
    // S in the contraction's own indexing
    SubsetMask s_compact = 0;
    {
      int position = 0;
      for (int e : mask_elements(rest)) {
        if (subset_contains(s_original, e))
          s_compact |= SubsetMask(1) << position;
        ++position;
      }
    }
    CHECK(restriction(contraction(m, t), s_compact) ==
          contraction(restriction(m, s_original | t),
                      [&] {
                        // T in the restriction's indexing
                        SubsetMask out = 0;
                        int position = 0;
                        for (int e : mask_elements(s_original | t)) {
                          if (subset_contains(t, e))
                            out |= SubsetMask(1) << position;
                          ++position;
                        }
                        return out;
                      }()));
  }
}

TEST_CASE("rank adds up across contraction") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const MultiplicityMatroid m = random_matrix(rng);
    for (SubsetMask t = 0; t <= m.full_set(); ++t) {
      const MultiplicityMatroid contracted = contraction(m, t);
      CHECK(m.full_rank() == m.rank(t) + contracted.full_rank());
    }
  }
}

TEST_CASE("product is a commutative monoid on multiplicities") {
  const MultiplicityMatroid m = two_by_two_diagonal();
  const MultiplicityMatroid trivial = m.trivialized();
  CHECK(product(m, trivial) == m);
  CHECK(product(trivial, m) == m);
  const MultiplicityMatroid square = product(m, m);
  CHECK(square.multiplicity(0b01) == 4);
  CHECK(square.multiplicity(0b11) == 36);
  CHECK(product(m, square) == product(square, m));
  CHECK(product(product(m, m), m) == product(m, product(m, m)));
}

TEST_CASE("product rejects mismatched underlying matroids") {
  const MultiplicityMatroid u12 = uniform_matroid(1, 2);
  const MultiplicityMatroid u22 = uniform_matroid(2, 2);
  CHECK_THROWS_WITH_AS(product(u12, u22), doctest::Contains("underlying"),
                       Error);
  const MultiplicityMatroid u11 = uniform_matroid(1, 1);
  CHECK_THROWS_AS(product(u12, u11), Error);
}

TEST_CASE("matroid axiom checker accepts real rank tables") {
  CHECK(check_matroid_axioms(uniform_matroid(2, 4).rank_table()).ok);
  CHECK(check_matroid_axioms(two_by_two_diagonal().rank_table()).ok);
}

TEST_CASE("matroid axiom checker pinpoints violations") {
  const MatroidCheck normalization = check_matroid_axioms({1, 1});
  CHECK_FALSE(normalization.ok);
  CHECK(normalization.witness->part("A") == 0);

  // rank jumps by 2 when adding an element
  const MatroidCheck unit = check_matroid_axioms({0, 0, 0, 2});
  CHECK_FALSE(unit.ok);
  CHECK(unit.witness->part("e") != 0);
}

TEST_CASE("dual rank is itself a matroid rank function") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 8; ++trial) {
    const MultiplicityMatroid m = random_matrix(rng);
    std::vector<int> dual(std::size_t(1) << m.size());
    for (SubsetMask a = 0; a <= m.full_set(); ++a) dual[a] = m.dual_rank(a);
    CHECK(check_matroid_axioms(dual).ok);
  }
}

TEST_CASE("arithmetic axioms hold for trivial multiplicities") {
  const AxiomReport report =
      check_arithmetic_axioms(uniform_matroid(2, 4));
  CHECK(report.all_ok());
}

TEST_CASE("arithmetic axioms hold for representable matroids") {
  const MultiplicityMatroid m = matrix_matroid(
      {{Int(2), Int(0)}, {Int(0), Int(3)}, {Int(1), Int(1)}});
  CHECK(check_arithmetic_axioms(m).all_ok());
}

TEST_CASE("axiom (1) counterexample on the broken point") {
  const MultiplicityMatroid broken =
      explicit_matroid(1, {0, 1}, {Int(2), Int(3)});
  const AxiomReport report = check_arithmetic_axioms(broken);
  CHECK(report.matroid_ok);
  CHECK_FALSE(report.axiom1.ok);
  CHECK(report.axiom1.witness->part("A") == 0);
  CHECK(report.axiom1.witness->part("e") == 0b1);
}

TEST_CASE("expand_mask deposits bits into the chosen positions") {
  CHECK(expand_mask(0b11, 0b1010) == 0b1010);
  CHECK(expand_mask(0b01, 0b1010) == 0b0010);
  CHECK(expand_mask(0, 0b1010) == 0);
}
