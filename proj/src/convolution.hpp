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

#ifndef ARITHMAT_CONVOLUTION_HPP
#define ARITHMAT_CONVOLUTION_HPP

// Verifiers for the convolution identities: each one computes the left
// side and the stated right-hand sum(s) as canonical polynomials and
// reports exact equality. Every identity also has an independent
// point-evaluation twin used by the probabilistic fast mode and as a
// cross-check oracle in the tests.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "constructors.hpp"
#include "matroid.hpp"
#include "tutte.hpp"

namespace arithmat {

enum class VerifyMode { automatic, symbolic, probabilistic };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::automatic;
  // automatic mode stays symbolic up to this ground-set size
  int symbolic_limit = 10;
  int probabilistic_points = 3;
  std::uint64_t point_seed = 0x5eed;
};

// Product-of-two-matroids identities; the factors must share the
// underlying matroid.
IdentityReport verify_product_multivariate(const MultiplicityMatroid& m1,
                                           const MultiplicityMatroid& m2,
                                           const VerifyOptions& options = {});
IdentityReport verify_product_univariate(const MultiplicityMatroid& m1,
                                         const MultiplicityMatroid& m2,
                                         const VerifyOptions& options = {});
IdentityReport verify_dupont(const MultiplicityMatroid& m1,
                             const MultiplicityMatroid& m2,
                             const VerifyOptions& options = {});
IdentityReport verify_backman_lenz(const MultiplicityMatroid& m1,
                                   const MultiplicityMatroid& m2,
                                   const VerifyOptions& options = {});

// Single-matroid corollaries (one factor classical).
IdentityReport verify_single_multivariate(const MultiplicityMatroid& m,
                                          const VerifyOptions& options = {});
IdentityReport verify_single_univariate(const MultiplicityMatroid& m,
                                        const VerifyOptions& options = {});
IdentityReport verify_mixed_tutte(const MultiplicityMatroid& m,
                                  const VerifyOptions& options = {});
IdentityReport verify_char_convolution(const MultiplicityMatroid& m,
                                       const VerifyOptions& options = {});
IdentityReport verify_classical_kook(const MultiplicityMatroid& m,
                                     const VerifyOptions& options = {});

bool identity_needs_pair(IdentityId id);

// Dispatcher; for the product identities a missing second matroid
// defaults to the trivial multiplicity on the same underlying matroid.
IdentityReport verify_identity(IdentityId id, const MultiplicityMatroid& m1,
                               const MultiplicityMatroid* m2 = nullptr,
                               const VerifyOptions& options = {});

// One point-evaluation trial of an identity at exact rational sample
// values (nonzero for inverted variables), fully independent of the
// polynomial engine.
bool identity_point_check(IdentityId id, const MultiplicityMatroid& m1,
                          const MultiplicityMatroid* m2, std::mt19937_64& rng);

struct CorpusEntry {
  std::string name;
  MatroidSpec first;
  std::optional<MatroidSpec> second;  // shares the underlying matroid
};

struct Corpus {
  std::uint64_t seed = 0;
  std::vector<CorpusEntry> entries;
};

// The default verification corpus: uniform matroids up to size 5, the
// complete graphs K3 and K4, seeded random integer-matrix matroids,
// seeded random multiplicity tables on U_{2,4}, and seeded pairs over a
// shared underlying matroid. Entries larger than max_n are skipped.
Corpus build_default_corpus(std::uint64_t seed, int max_n = 6);

struct AggregateEntry {
  std::string entry;
  std::optional<std::string> error;  // construction failure, identities skipped
  std::vector<IdentityReport> reports;
};

struct AggregateReport {
  bool pass = false;
  std::vector<AggregateEntry> entries;
};

// Runs every applicable identity on every corpus entry; construction
// errors are recorded per entry without aborting the run.
AggregateReport verify_all(const Corpus& corpus,
                           const VerifyOptions& options = {});

}  // namespace arithmat

#endif  // ARITHMAT_CONVOLUTION_HPP
