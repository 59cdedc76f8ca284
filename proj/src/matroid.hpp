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

#ifndef ARITHMAT_MATROID_HPP
#define ARITHMAT_MATROID_HPP

// Multiplicity matroids with dense rank/multiplicity tables over all
// subsets of the ground set, plus minors, products and the axiom
// checkers for matroid rank axioms and the arithmetic-matroid axioms.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace arithmat {

// Subsets of the ground set {0, ..., n-1}; element e present iff bit e set.
using SubsetMask = std::uint64_t;

inline int subset_size(SubsetMask a) { return std::popcount(a); }

inline bool subset_contains(SubsetMask a, int element) {
  return (a >> element) & 1u;
}

// Places the bits of `compact` at the set-bit positions of `within`:
// bit i of compact lands on the i-th lowest set bit of within.
SubsetMask expand_mask(SubsetMask compact, SubsetMask within);

std::vector<int> mask_elements(SubsetMask a);

// Visits every submask of `space`, including 0 and space itself, in
// increasing numeric order.
template <typename Fn>
void for_each_submask(SubsetMask space, Fn&& fn) {
  SubsetMask s = 0;
  while (true) {
    fn(s);
    if (s == space) break;
    s = (s - space) & space;  // next submask upward
  }
}

// Dense tables get large quickly; inputs beyond this are rejected.
inline constexpr int kGroundSetCap = 20;

class MultiplicityMatroid {
 public:
  // rank and mult are tables of length 2^n indexed by SubsetMask.
  // labels carry the original element identity of each ground-set
  // position (used for variable indexing under minors); empty means
  // the identity labeling 0..n-1.
  MultiplicityMatroid(int n, std::vector<int> rank, std::vector<Int> mult,
                      std::vector<int> labels = {}, int cap = kGroundSetCap);

  int size() const { return n_; }
  SubsetMask full_set() const { return (SubsetMask(1) << n_) - 1; }

  int rank(SubsetMask a) const { return rank_[a]; }
  const Int& multiplicity(SubsetMask a) const { return mult_[a]; }
  int full_rank() const { return rank_[full_set()]; }

  // rk*(A) = |A| + rk(X \ A) - rk(X).
  int dual_rank(SubsetMask a) const;

  const std::vector<int>& rank_table() const { return rank_; }
  const std::vector<Int>& multiplicity_table() const { return mult_; }
  const std::vector<int>& labels() const { return labels_; }
  int label(int element) const { return labels_[element]; }

  // Same matroid with the trivial multiplicity (identically 1).
  MultiplicityMatroid trivialized() const;

  friend bool operator==(const MultiplicityMatroid&,
                         const MultiplicityMatroid&) = default;

 private:
  int n_;
  std::vector<int> rank_;
  std::vector<Int> mult_;
  std::vector<int> labels_;
};

// Minor on ground set T, relabeled to 0..|T|-1 with original labels kept.
MultiplicityMatroid restriction(const MultiplicityMatroid& m, SubsetMask t);

// Minor on X \ T with rk(A) = rk(A u T) - rk(T) and m(A) = m(A u T).
MultiplicityMatroid contraction(const MultiplicityMatroid& m, SubsetMask t);

// Pointwise product of the multiplicity functions over a shared
// underlying matroid; throws UnderlyingMatroidMismatch otherwise.
MultiplicityMatroid product(const MultiplicityMatroid& m1,
                            const MultiplicityMatroid& m2);

// A named list of subsets witnessing a failed check, e.g. {"A", "e"}.
struct CheckWitness {
  std::vector<std::pair<std::string, SubsetMask>> parts;

  SubsetMask part(const std::string& name) const;
};

struct MatroidCheck {
  bool ok = true;
  std::optional<CheckWitness> witness;
};

// Normalization, unit increase and submodularity over all pairs of
// subsets; the first violation in scan order is reported.
MatroidCheck check_matroid_axioms(const std::vector<int>& rank_table);

struct AxiomCheck {
  bool ok = true;
  std::optional<CheckWitness> witness;
};

struct AxiomReport {
  bool matroid_ok = true;
  AxiomCheck axiom1;  // witness parts: A, e
  AxiomCheck axiom2;  // witness parts: A, B, F
  AxiomCheck axiom3;  // witness parts: A, B
  AxiomCheck axiom4;  // witness parts: A, B

  bool all_ok() const {
    return matroid_ok && axiom1.ok && axiom2.ok && axiom3.ok && axiom4.ok;
  }
};

// The four arithmetic-matroid axioms, checked exhaustively. Axiom (2)
// ranges over all partitions of B \ A into (F, T) including empty parts.
AxiomReport check_arithmetic_axioms(const MultiplicityMatroid& m);

}  // namespace arithmat

#endif  // ARITHMAT_MATROID_HPP
