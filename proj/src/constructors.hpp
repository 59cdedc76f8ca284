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

#ifndef ARITHMAT_CONSTRUCTORS_HPP
#define ARITHMAT_CONSTRUCTORS_HPP

// Builders for multiplicity matroids from user-facing descriptions:
// uniform, graphic, representable over the integers, and explicit tables.

#include <optional>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "matroid.hpp"

namespace arithmat {

// U_{r,n}: rank(A) = min(|A|, r), trivial multiplicity.
MultiplicityMatroid uniform_matroid(int rank, int size);

// Cycle matroid of a multigraph; loops and parallel edges allowed.
// rank(A) = vertices - (components of the spanning subgraph (V, A)).
MultiplicityMatroid graphic_matroid(int vertices,
                                    const std::vector<std::pair<int, int>>& edges);

// Matroid of n integer columns of common height: rank(A) is the rank of
// the column submatrix over the rationals (fraction-free elimination),
// multiplicity(A) is the product of the nonzero invariant factors of its
// Smith normal form; m(empty) = 1.
MultiplicityMatroid matrix_matroid(const std::vector<std::vector<Int>>& columns);

// Validates the rank table against the matroid axioms and the
// multiplicities against positivity; arithmetic axioms are not required.
MultiplicityMatroid explicit_matroid(int size, std::vector<int> rank_table,
                                     std::vector<Int> mult_table);

struct MatroidSpec {
  enum class Kind { uniform, graphic, matrix, explicit_table };

  Kind kind = Kind::uniform;
  // uniform
  int rank = 0;
  int size = 0;
  // uniform (optional) and explicit (required): full table of 2^size values
  std::optional<std::vector<Int>> multiplicity;
  // graphic
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  // matrix
  std::vector<std::vector<Int>> columns;
  // explicit
  std::vector<int> rank_table;

  // Ground-set size implied by the description.
  int ground_size() const;

  friend bool operator==(const MatroidSpec&, const MatroidSpec&) = default;
};

MultiplicityMatroid build_matroid(const MatroidSpec& spec);

// Rank over the rationals of an integer matrix given as rows, computed by
// fraction-free (Bareiss) elimination.
int rational_rank(std::vector<std::vector<Int>> rows);

// Nonzero invariant factors d1 | d2 | ... | dr of an integer matrix,
// each positive.
std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> rows);

}  // namespace arithmat

#endif  // ARITHMAT_CONSTRUCTORS_HPP
