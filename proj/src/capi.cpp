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

#include "arithmat/arithmat.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "convolution.hpp"
#include "error.hpp"
#include "io.hpp"
#include "matroid.hpp"
#include "tutte.hpp"

struct amt_matroid {
  arithmat::MultiplicityMatroid value;
};

namespace {

thread_local std::string g_last_error;

amt_status status_for(const arithmat::Error& error) {
  using arithmat::ErrorCode;
  switch (error.code()) {
    case ErrorCode::malformed_document:
    case ErrorCode::unknown_kind:
    case ErrorCode::bad_subset_key:
    case ErrorCode::table_size_mismatch:
      return AMT_ERROR_PARSE;
    default:
      return AMT_ERROR_INVALID;
  }
}

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

amt_status fail(amt_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
amt_status guarded(Fn&& fn) {
  try {
    const amt_status status = fn();
    if (status == AMT_OK) g_last_error.clear();
    return status;
  } catch (const arithmat::Error& error) {
    return fail(status_for(error), error.what());
  } catch (const std::exception& error) {
    return fail(AMT_ERROR_INTERNAL, error.what());
  }
}

bool parse_mode(const char* mode, arithmat::VerifyOptions& options) {
  if (mode == nullptr || std::strcmp(mode, "auto") == 0) {
    options.mode = arithmat::VerifyMode::automatic;
    return true;
  }
  if (std::strcmp(mode, "symbolic") == 0) {
    options.mode = arithmat::VerifyMode::symbolic;
    return true;
  }
  if (std::strcmp(mode, "fast") == 0) {
    options.mode = arithmat::VerifyMode::probabilistic;
    return true;
  }
  return false;
}

}  // namespace

extern "C" {

amt_status amt_matroid_from_json(const char* text, amt_matroid** out) {
  if (text == nullptr || out == nullptr)
    return fail(AMT_ERROR_INVALID, "null argument");
  *out = nullptr;
  return guarded([&] {
    const arithmat::MatroidSpec spec = arithmat::parse_spec(text);
    *out = new amt_matroid{arithmat::build_matroid(spec)};
    return AMT_OK;
  });
}

void amt_matroid_free(amt_matroid* m) { delete m; }

int amt_matroid_size(const amt_matroid* m) {
  return m == nullptr ? -1 : m->value.size();
}

amt_status amt_compute_poly(const amt_matroid* m, const char* which,
                            char** out) {
  if (m == nullptr || which == nullptr || out == nullptr)
    return fail(AMT_ERROR_INVALID, "null argument");
  *out = nullptr;
  const auto kind = arithmat::poly_kind_from_token(which);
  if (!kind)
    return fail(AMT_ERROR_UNSUPPORTED,
                std::string("unknown polynomial \"") + which + "\"");
  return guarded([&] {
    *out = dup_string(
        arithmat::canonical_string(arithmat::compute_poly(m->value, *kind)));
    return AMT_OK;
  });
}

amt_status amt_verify(const amt_matroid* m, const amt_matroid* second,
                      const char* identity, const char* mode, int as_json,
                      char** report, int* all_equal) {
  if (m == nullptr || identity == nullptr || report == nullptr ||
      all_equal == nullptr)
    return fail(AMT_ERROR_INVALID, "null argument");
  *report = nullptr;
  *all_equal = 0;
  arithmat::VerifyOptions options;
  if (!parse_mode(mode, options))
    return fail(AMT_ERROR_UNSUPPORTED,
                std::string("unknown mode \"") + mode + "\"");
  const arithmat::MultiplicityMatroid* second_value =
      second == nullptr ? nullptr : &second->value;

  return guarded([&] {
    std::vector<arithmat::IdentityReport> reports;
    if (std::strcmp(identity, "all") == 0) {
      using arithmat::IdentityId;
      for (IdentityId id :
           {IdentityId::product_multivariate, IdentityId::product_univariate,
            IdentityId::single_multivariate, IdentityId::single_univariate,
            IdentityId::dupont_abcd, IdentityId::backman_lenz,
            IdentityId::mixed_tutte, IdentityId::char_convolution,
            IdentityId::classical_kook})
        reports.push_back(
            arithmat::verify_identity(id, m->value, second_value, options));
    } else {
      const auto id = arithmat::identity_from_token(identity);
      if (!id) {
        g_last_error = std::string("unknown identity \"") + identity + "\"";
        return AMT_ERROR_UNSUPPORTED;
      }
      reports.push_back(
          arithmat::verify_identity(*id, m->value, second_value, options));
    }

    bool equal = true;
    for (const arithmat::IdentityReport& entry : reports)
      equal = equal && entry.equal;

    std::string text;
    if (as_json) {
      text = reports.size() == 1
                 ? arithmat::identity_report_json(reports[0], true)
                 : arithmat::identity_reports_json(reports);
    } else {
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i > 0) text += "\n";
        text += arithmat::identity_report_text(reports[i]);
      }
    }
    *all_equal = equal ? 1 : 0;
    *report = dup_string(text);
    return AMT_OK;
  });
}

amt_status amt_check_axioms(const amt_matroid* m, int as_json, char** report,
                            int* ok) {
  if (m == nullptr || report == nullptr || ok == nullptr)
    return fail(AMT_ERROR_INVALID, "null argument");
  *report = nullptr;
  *ok = 0;
  return guarded([&] {
    const arithmat::AxiomReport axioms =
        arithmat::check_arithmetic_axioms(m->value);
    *ok = axioms.all_ok() ? 1 : 0;
    *report = dup_string(as_json
                             ? arithmat::axiom_report_json(axioms, m->value)
                             : arithmat::axiom_report_text(axioms, m->value));
    return AMT_OK;
  });
}

amt_status amt_corpus_run(uint64_t seed, int max_n, int as_json, char** report,
                          int* pass) {
  if (report == nullptr || pass == nullptr)
    return fail(AMT_ERROR_INVALID, "null argument");
  *report = nullptr;
  *pass = 0;
  return guarded([&] {
    const arithmat::Corpus corpus =
        arithmat::build_default_corpus(seed, max_n <= 0 ? 6 : max_n);
    const arithmat::AggregateReport aggregate = arithmat::verify_all(corpus);
    *pass = aggregate.pass ? 1 : 0;
    *report = dup_string(as_json ? arithmat::aggregate_report_json(aggregate)
                                 : arithmat::aggregate_report_text(aggregate));
    return AMT_OK;
  });
}

const char* amt_last_error(void) { return g_last_error.c_str(); }

void amt_free_string(char* text) { std::free(text); }

}  // extern "C"
