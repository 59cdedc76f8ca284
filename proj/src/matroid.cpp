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

#include "matroid.hpp"

#include <utility>

#include "error.hpp"

namespace arithmat {

SubsetMask expand_mask(SubsetMask compact, SubsetMask within) {
  SubsetMask out = 0;
  int bit = 0;
  for (SubsetMask rest = within; rest != 0; rest &= rest - 1, ++bit) {
    if (subset_contains(compact, bit)) out |= rest & -rest;
  }
  return out;
}

std::vector<int> mask_elements(SubsetMask a) {
  std::vector<int> out;
  for (int e = 0; a >> e; ++e)
    if (subset_contains(a, e)) out.push_back(e);
  return out;
}

MultiplicityMatroid::MultiplicityMatroid(int n, std::vector<int> rank,
                                         std::vector<Int> mult,
                                         std::vector<int> labels, int cap)
    : n_(n),
      rank_(std::move(rank)),
      mult_(std::move(mult)),
      labels_(std::move(labels)) {
  if (n_ < 0 || n_ > cap)
    throw Error(ErrorCode::ground_set_too_large,
                "ground set of size " + std::to_string(n_) +
                    " exceeds the cap of " + std::to_string(cap));
  const std::size_t table = std::size_t(1) << n_;
  if (rank_.size() != table || mult_.size() != table)
    throw Error(ErrorCode::invalid_argument,
                "tables must have length 2^n = " + std::to_string(table));
  for (const Int& m : mult_)
    if (m < 1)
      throw Error(ErrorCode::nonpositive_multiplicity,
                  "multiplicity " + m.str() + " is not positive");
  if (labels_.empty()) {
    labels_.resize(n_);
    for (int e = 0; e < n_; ++e) labels_[e] = e;
  }
  if (static_cast<int>(labels_.size()) != n_)
    throw Error(ErrorCode::invalid_argument, "labels must have length n");
}

int MultiplicityMatroid::dual_rank(SubsetMask a) const {
  return subset_size(a) + rank_[full_set() & ~a] - full_rank();
}

MultiplicityMatroid MultiplicityMatroid::trivialized() const {
  return MultiplicityMatroid(
      n_, rank_, std::vector<Int>(std::size_t(1) << n_, Int(1)), labels_);
}

MultiplicityMatroid restriction(const MultiplicityMatroid& m, SubsetMask t) {
  const int k = subset_size(t);
  std::vector<int> rank(std::size_t(1) << k);
  std::vector<Int> mult(std::size_t(1) << k);
  for (SubsetMask s = 0; s < (SubsetMask(1) << k); ++s) {
    const SubsetMask original = expand_mask(s, t);
    rank[s] = m.rank(original);
    mult[s] = m.multiplicity(original);
  }
  std::vector<int> labels;
  labels.reserve(k);
  for (int e : mask_elements(t)) labels.push_back(m.label(e));
  return MultiplicityMatroid(k, std::move(rank), std::move(mult),
                             std::move(labels));
}

MultiplicityMatroid contraction(const MultiplicityMatroid& m, SubsetMask t) {
  const SubsetMask kept = m.full_set() & ~t;
  const int k = subset_size(kept);
  const int rank_t = m.rank(t);
  std::vector<int> rank(std::size_t(1) << k);
  std::vector<Int> mult(std::size_t(1) << k);
  for (SubsetMask s = 0; s < (SubsetMask(1) << k); ++s) {
    const SubsetMask original = expand_mask(s, kept) | t;
    rank[s] = m.rank(original) - rank_t;
    mult[s] = m.multiplicity(original);
  }
  std::vector<int> labels;
  labels.reserve(k);
  for (int e : mask_elements(kept)) labels.push_back(m.label(e));
  return MultiplicityMatroid(k, std::move(rank), std::move(mult),
                             std::move(labels));
}

MultiplicityMatroid product(const MultiplicityMatroid& m1,
                            const MultiplicityMatroid& m2) {
  if (m1.size() != m2.size() || m1.rank_table() != m2.rank_table() ||
      m1.labels() != m2.labels())
    throw Error(ErrorCode::underlying_matroid_mismatch,
                "product factors must share the underlying matroid");
  std::vector<Int> mult(std::size_t(1) << m1.size());
  for (SubsetMask a = 0; a <= m1.full_set(); ++a)
    mult[a] = m1.multiplicity(a) * m2.multiplicity(a);
  return MultiplicityMatroid(m1.size(), m1.rank_table(), std::move(mult),
                             m1.labels());
}

SubsetMask CheckWitness::part(const std::string& name) const {
  for (const auto& [part_name, mask] : parts)
    if (part_name == name) return mask;
  throw Error(ErrorCode::invalid_argument, "no witness part named " + name);
}

MatroidCheck check_matroid_axioms(const std::vector<int>& rank_table) {
  if (rank_table.empty() || (rank_table.size() & (rank_table.size() - 1)) != 0)
    throw Error(ErrorCode::invalid_argument,
                "rank table length must be a power of two");
  const int n = std::countr_zero(rank_table.size());
  const SubsetMask full = (SubsetMask(1) << n) - 1;

  if (rank_table[0] != 0)
    return {false, CheckWitness{{{"A", 0}}}};

  // unit increase: rk(A) <= rk(A u e) <= rk(A) + 1
  for (SubsetMask a = 0; a <= full; ++a) {
    for (int e = 0; e < n; ++e) {
      if (subset_contains(a, e)) continue;
      const int base = rank_table[a];
      const int grown = rank_table[a | (SubsetMask(1) << e)];
      if (grown < base || grown > base + 1)
        return {false, CheckWitness{{{"A", a}, {"e", SubsetMask(1) << e}}}};
    }
  }

  // submodularity over all pairs
  for (SubsetMask a = 0; a <= full; ++a) {
    for (SubsetMask b = 0; b <= full; ++b) {
      if (rank_table[a | b] + rank_table[a & b] >
          rank_table[a] + rank_table[b])
        return {false, CheckWitness{{{"A", a}, {"B", b}}}};
    }
  }
  return {};
}

namespace {

bool divides(const Int& a, const Int& b) { return b % a == 0; }

AxiomCheck check_axiom1(const MultiplicityMatroid& m) {
  const SubsetMask full = m.full_set();
  for (SubsetMask a = 0; a <= full; ++a) {
    for (int e = 0; e < m.size(); ++e) {
      if (subset_contains(a, e)) continue;
      const SubsetMask grown = a | (SubsetMask(1) << e);
      const bool ok = m.rank(grown) == m.rank(a)
                          ? divides(m.multiplicity(grown), m.multiplicity(a))
                          : divides(m.multiplicity(a), m.multiplicity(grown));
      if (!ok)
        return {false, CheckWitness{{{"A", a}, {"e", SubsetMask(1) << e}}}};
    }
  }
  return {};
}

AxiomCheck check_axiom2(const MultiplicityMatroid& m) {
  const SubsetMask full = m.full_set();
  for (SubsetMask a = 0; a <= full; ++a) {
    const SubsetMask complement = full & ~a;
    AxiomCheck result;
    for_each_submask(complement, [&](SubsetMask d) {
      if (!result.ok) return;
      const SubsetMask b = a | d;
      for_each_submask(d, [&](SubsetMask f) {
        if (!result.ok) return;
        // molecule condition: rk(C) = rk(A) + |C n F| for all A <= C <= B
        bool molecule = true;
        for_each_submask(d, [&](SubsetMask extra) {
          if (!molecule) return;
          if (m.rank(a | extra) != m.rank(a) + subset_size(extra & f))
            molecule = false;
        });
        if (!molecule) return;
        const SubsetMask t = d & ~f;
        if (m.multiplicity(a) * m.multiplicity(b) !=
            m.multiplicity(a | f) * m.multiplicity(a | t))
          result = {false, CheckWitness{{{"A", a}, {"B", b}, {"F", f}}}};
      });
    });
    if (!result.ok) return result;
  }
  return {};
}

AxiomCheck check_axiom3(const MultiplicityMatroid& m) {
  const SubsetMask full = m.full_set();
  for (SubsetMask a = 0; a <= full; ++a) {
    const SubsetMask complement = full & ~a;
    AxiomCheck result;
    for_each_submask(complement, [&](SubsetMask d) {
      if (!result.ok) return;
      const SubsetMask b = a | d;
      if (m.rank(b) != m.rank(a)) return;
      Int sum = 0;
      for_each_submask(d, [&](SubsetMask extra) {
        const Int& value = m.multiplicity(a | extra);
        if (subset_size(extra) & 1)
          sum -= value;
        else
          sum += value;
      });
      if (sum < 0) result = {false, CheckWitness{{{"A", a}, {"B", b}}}};
    });
    if (!result.ok) return result;
  }
  return {};
}

AxiomCheck check_axiom4(const MultiplicityMatroid& m) {
  const SubsetMask full = m.full_set();
  for (SubsetMask a = 0; a <= full; ++a) {
    const SubsetMask complement = full & ~a;
    AxiomCheck result;
    for_each_submask(complement, [&](SubsetMask d) {
      if (!result.ok) return;
      const SubsetMask b = a | d;
      if (m.dual_rank(b) != m.dual_rank(a)) return;
      Int sum = 0;
      for_each_submask(d, [&](SubsetMask extra) {
        const Int& value = m.multiplicity(full & ~(a | extra));
        if (subset_size(extra) & 1)
          sum -= value;
        else
          sum += value;
      });
      if (sum < 0) result = {false, CheckWitness{{{"A", a}, {"B", b}}}};
    });
    if (!result.ok) return result;
  }
  return {};
}

}  // namespace

AxiomReport check_arithmetic_axioms(const MultiplicityMatroid& m) {
  AxiomReport report;
  report.matroid_ok = check_matroid_axioms(m.rank_table()).ok;
  report.axiom1 = check_axiom1(m);
  report.axiom2 = check_axiom2(m);
  report.axiom3 = check_axiom3(m);
  report.axiom4 = check_axiom4(m);
  return report;
}

}  // namespace arithmat
