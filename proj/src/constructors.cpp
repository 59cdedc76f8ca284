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

#include "constructors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "error.hpp"

namespace arithmat {

MultiplicityMatroid uniform_matroid(int rank, int size) {
  if (rank < 0 || size < 0 || rank > size)
    throw Error(ErrorCode::rank_exceeds_size,
                "uniform matroid needs 0 <= rank <= size, got rank " +
                    std::to_string(rank) + ", size " + std::to_string(size));
  if (size > kGroundSetCap)
    throw Error(ErrorCode::ground_set_too_large, std::to_string(size));
  std::vector<int> rank_table(std::size_t(1) << size);
  for (SubsetMask a = 0; a < (SubsetMask(1) << size); ++a)
    rank_table[a] = std::min(subset_size(a), rank);
  return MultiplicityMatroid(size, std::move(rank_table),
                             std::vector<Int>(std::size_t(1) << size, Int(1)));
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  // returns true when the edge merged two components
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

MultiplicityMatroid graphic_matroid(
    int vertices, const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(edges.size());
  if (vertices < 1)
    throw Error(ErrorCode::invalid_argument, "graph needs at least one vertex");
  if (n > kGroundSetCap)
    throw Error(ErrorCode::ground_set_too_large, std::to_string(n));
  for (const auto& [from, to] : edges)
    if (from < 0 || to < 0 || from >= vertices || to >= vertices)
      throw Error(ErrorCode::invalid_argument,
                  "edge endpoint out of range: (" + std::to_string(from) +
                      ", " + std::to_string(to) + ")");
  std::vector<int> rank_table(std::size_t(1) << n);
  for (SubsetMask a = 0; a < (SubsetMask(1) << n); ++a) {
    UnionFind components(vertices);
    int rank = 0;
    for (int e = 0; e < n; ++e)
      if (subset_contains(a, e) && components.unite(edges[e].first, edges[e].second))
        ++rank;
    rank_table[a] = rank;
  }
  return MultiplicityMatroid(n, std::move(rank_table),
                             std::vector<Int>(std::size_t(1) << n, Int(1)));
}

int rational_rank(std::vector<std::vector<Int>> rows) {
  if (rows.empty() || rows[0].empty()) return 0;
  const int height = static_cast<int>(rows.size());
  const int width = static_cast<int>(rows[0].size());
  int rank = 0;
  int col = 0;
  Int previous_pivot = 1;
  for (; rank < height && col < width; ++col) {
    int pivot_row = -1;
    for (int i = rank; i < height; ++i)
      if (rows[i][col] != 0) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) continue;
    std::swap(rows[rank], rows[pivot_row]);
    // Bareiss step: all divisions are exact
    for (int i = rank + 1; i < height; ++i) {
      for (int j = col + 1; j < width; ++j)
        rows[i][j] = (rows[i][j] * rows[rank][col] -
                      rows[i][col] * rows[rank][j]) /
                     previous_pivot;
      rows[i][col] = 0;
    }
    previous_pivot = rows[rank][col];
    ++rank;
  }
  return rank;
}

namespace {

// One Smith pivot at position (t, t): clears row t and column t and makes
// the pivot divide every remaining entry of the trailing submatrix.
void smith_pivot(std::vector<std::vector<Int>>& a, int t) {
  const int height = static_cast<int>(a.size());
  const int width = static_cast<int>(a[0].size());
  while (true) {
    // clear column t with euclidean row steps
    bool column_clear = true;
    for (int i = t + 1; i < height; ++i) {
      if (a[i][t] == 0) continue;
      const Int quotient = a[i][t] / a[t][t];
      for (int j = t; j < width; ++j) a[i][j] -= quotient * a[t][j];
      if (a[i][t] != 0) {
        std::swap(a[i], a[t]);  // strictly smaller pivot
        column_clear = false;
        break;
      }
    }
    if (!column_clear) continue;

    bool row_clear = true;
    for (int j = t + 1; j < width; ++j) {
      if (a[t][j] == 0) continue;
      const Int quotient = a[t][j] / a[t][t];
      for (int i = t; i < height; ++i) a[i][j] -= quotient * a[i][t];
      if (a[t][j] != 0) {
        for (int i = t; i < height; ++i) std::swap(a[i][j], a[i][t]);
        row_clear = false;
        break;
      }
    }
    if (!row_clear) continue;

    // pivot must divide the trailing submatrix for the invariant-factor
    // chain; fold an offending row in and restart
    bool divides_all = true;
    for (int i = t + 1; i < height && divides_all; ++i)
      for (int j = t + 1; j < width && divides_all; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (int k = t; k < width; ++k) a[t][k] += a[i][k];
          divides_all = false;
        }
    if (divides_all) return;
  }
}

}  // namespace

std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> rows) {
  std::vector<Int> factors;
  if (rows.empty() || rows[0].empty()) return factors;
  const int height = static_cast<int>(rows.size());
  const int width = static_cast<int>(rows[0].size());
  const int bound = std::min(height, width);
  for (int t = 0; t < bound; ++t) {
    // move some nonzero entry of the trailing submatrix to (t, t)
    int pivot_i = -1, pivot_j = -1;
    for (int i = t; i < height && pivot_i < 0; ++i)
      for (int j = t; j < width; ++j)
        if (rows[i][j] != 0) {
          pivot_i = i;
          pivot_j = j;
          break;
        }
    if (pivot_i < 0) break;
    std::swap(rows[t], rows[pivot_i]);
    if (pivot_j != t)
      for (int i = t; i < height; ++i) std::swap(rows[i][pivot_j], rows[i][t]);
    smith_pivot(rows, t);
    factors.push_back(abs(rows[t][t]));
  }
  return factors;
}

MultiplicityMatroid matrix_matroid(const std::vector<std::vector<Int>>& columns) {
  const int n = static_cast<int>(columns.size());
  if (n > kGroundSetCap)
    throw Error(ErrorCode::ground_set_too_large, std::to_string(n));
  const std::size_t height = columns.empty() ? 0 : columns[0].size();
  for (const auto& column : columns)
    if (column.size() != height)
      throw Error(ErrorCode::height_mismatch,
                  "columns must share a common height");

  std::vector<int> rank_table(std::size_t(1) << n);
  std::vector<Int> mult_table(std::size_t(1) << n, Int(1));
  for (SubsetMask a = 1; a < (SubsetMask(1) << n); ++a) {
    const std::vector<int> chosen = mask_elements(a);
    std::vector<std::vector<Int>> submatrix(height,
                                            std::vector<Int>(chosen.size()));
    for (std::size_t j = 0; j < chosen.size(); ++j)
      for (std::size_t i = 0; i < height; ++i)
        submatrix[i][j] = columns[chosen[j]][i];
    rank_table[a] = rational_rank(submatrix);
    Int multiplicity = 1;
    for (const Int& factor : smith_invariant_factors(std::move(submatrix)))
      multiplicity *= factor;
    mult_table[a] = multiplicity;
  }
  return MultiplicityMatroid(n, std::move(rank_table), std::move(mult_table));
}

MultiplicityMatroid explicit_matroid(int size, std::vector<int> rank_table,
                                     std::vector<Int> mult_table) {
  if (size < 0 || size > kGroundSetCap)
    throw Error(ErrorCode::ground_set_too_large, std::to_string(size));
  const std::size_t table = std::size_t(1) << size;
  if (rank_table.size() != table || mult_table.size() != table)
    throw Error(ErrorCode::table_size_mismatch,
                "tables must have length 2^size = " + std::to_string(table));
  for (const Int& m : mult_table)
    if (m < 1)
      throw Error(ErrorCode::nonpositive_multiplicity,
                  "multiplicity " + m.str() + " is not positive");
  const MatroidCheck check = check_matroid_axioms(rank_table);
  if (!check.ok) {
    std::string detail = "rank table violates the matroid axioms at";
    for (const auto& [name, mask] : check.witness->parts) {
      detail += " " + name + "={";
      bool first = true;
      for (int e : mask_elements(mask)) {
        if (!first) detail += ",";
        first = false;
        detail += std::to_string(e);
      }
      detail += "}";
    }
    throw Error(ErrorCode::not_a_matroid, detail);
  }
  return MultiplicityMatroid(size, std::move(rank_table),
                             std::move(mult_table));
}

int MatroidSpec::ground_size() const {
  switch (kind) {
    case Kind::uniform:
      return size;
    case Kind::graphic:
      return static_cast<int>(edges.size());
    case Kind::matrix:
      return static_cast<int>(columns.size());
    case Kind::explicit_table:
      return size;
  }
  return 0;
}

MultiplicityMatroid build_matroid(const MatroidSpec& spec) {
  switch (spec.kind) {
    case MatroidSpec::Kind::uniform: {
      MultiplicityMatroid base = uniform_matroid(spec.rank, spec.size);
      if (!spec.multiplicity) return base;
      return explicit_matroid(spec.size, base.rank_table(),
                              *spec.multiplicity);
    }
    case MatroidSpec::Kind::graphic:
      return graphic_matroid(spec.vertices, spec.edges);
    case MatroidSpec::Kind::matrix:
      return matrix_matroid(spec.columns);
    case MatroidSpec::Kind::explicit_table: {
      if (!spec.multiplicity)
        throw Error(ErrorCode::table_size_mismatch,
                    "explicit spec is missing its multiplicity table");
      return explicit_matroid(spec.size, spec.rank_table, *spec.multiplicity);
    }
  }
  throw Error(ErrorCode::unknown_kind, "unreachable");
}

}  // namespace arithmat
