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

#include <functional>

#include "constructors.hpp"
#include "convolution.hpp"
#include "error.hpp"
#include "io.hpp"
#include "json.hpp"

using namespace arithmat;
using nlohmann::json;

namespace {

ErrorCode code_of(const std::function<void()>& action) {
  try {
    action();
  } catch (const Error& error) {
    return error.code();
  }
  throw std::runtime_error("expected an Error");
}

}  // namespace

TEST_CASE("parse matrix and uniform specs") {
  const MatroidSpec matrix = parse_spec(R"({"kind":"matrix","columns":[[2]]})");
  CHECK(matrix.kind == MatroidSpec::Kind::matrix);
  CHECK(build_matroid(matrix).multiplicity(0b1) == 2);

  const MatroidSpec uniform =
      parse_spec(R"({"kind":"uniform","rank":2,"size":4})");
  CHECK(build_matroid(uniform) == uniform_matroid(2, 4));
}

TEST_CASE("parse explicit spec with subset keys") {
  const MatroidSpec spec = parse_spec(
      R"({"kind":"explicit","size":1,"rank":{"":0,"0":1},"multiplicity":{"":1,"0":2}})");
  CHECK(build_matroid(spec) == matrix_matroid({{Int(2)}}));
}

TEST_CASE("parse graphic spec") {
  const MatroidSpec spec = parse_spec(
      R"({"kind":"graphic","vertices":3,"edges":[[0,1],[0,2],[1,2]]})");
  CHECK(build_matroid(spec).full_rank() == 2);
}

TEST_CASE("tables accept a default fill value") {
  const MatroidSpec spec = parse_spec(
      R"({"kind":"explicit","size":2,"rank":{"":0,"0":1,"1":1,"0,1":2},
          "multiplicity":{"default":1,"0,1":4}})");
  const MultiplicityMatroid m = build_matroid(spec);
  CHECK(m.multiplicity(0b01) == 1);
  CHECK(m.multiplicity(0b11) == 4);
}

TEST_CASE("multiplicities can travel as decimal strings") {
  const MatroidSpec spec = parse_spec(
      R"({"kind":"explicit","size":1,"rank":{"":0,"0":1},
          "multiplicity":{"":1,"0":"36893488147419103232"}})");
  CHECK(build_matroid(spec).multiplicity(0b1) == Int("36893488147419103232"));
}

TEST_CASE("parse errors carry the spec error codes") {
  CHECK(code_of([] { parse_spec("not json at all"); }) ==
        ErrorCode::malformed_document);
  CHECK(code_of([] { parse_spec(R"({"kind":"moebius"})"); }) ==
        ErrorCode::unknown_kind);
  CHECK(code_of([] {
          parse_spec(R"({"kind":"uniform","rank":1,"size":2,"bogus":1})");
        }) == ErrorCode::malformed_document);
  CHECK(code_of([] {
          parse_spec(
              R"({"kind":"explicit","size":1,"rank":{"":0,"2":1},
                  "multiplicity":{"":1,"0":1}})");
        }) == ErrorCode::bad_subset_key);
  CHECK(code_of([] {
          parse_spec(
              R"({"kind":"explicit","size":1,"rank":{"":0,"0,0":1},
                  "multiplicity":{"":1,"0":1}})");
        }) == ErrorCode::bad_subset_key);
  CHECK(code_of([] {
          parse_spec(
              R"({"kind":"explicit","size":2,"rank":{"":0},
                  "multiplicity":{"default":1}})");
        }) == ErrorCode::table_size_mismatch);
}

TEST_CASE("emitted specs parse back to identical matroids") {
  const Corpus corpus = build_default_corpus(42);
  for (const CorpusEntry& entry : corpus.entries) {
    CHECK(build_matroid(parse_spec(emit_spec(entry.first))) ==
          build_matroid(entry.first));
    if (entry.second)
      CHECK(build_matroid(parse_spec(emit_spec(*entry.second))) ==
            build_matroid(*entry.second));
  }
}

TEST_CASE("identity report JSON round-trips its fields") {
  const MultiplicityMatroid two = matrix_matroid({{Int(2)}});
  const IdentityReport report = verify_char_convolution(two);
  const json parsed = json::parse(identity_report_json(report, true));
  CHECK(parsed["identity"] == "char");
  CHECK(parsed["equal"] == report.equal);
  CHECK(parsed["lhs"] == canonical_string(report.lhs));
  CHECK(parsed["rhs1"] == canonical_string(report.rhs_first));
  CHECK(parsed["rhs2"] == canonical_string(*report.rhs_second));
  CHECK(parsed["millis"].is_number());

  const IdentityReport kook = verify_classical_kook(two);
  const json no_second = json::parse(identity_report_json(kook, false));
  CHECK_FALSE(no_second.contains("rhs2"));
  CHECK_FALSE(no_second.contains("millis"));
}

TEST_CASE("aggregate JSON matches the in-memory report") {
  Corpus corpus;
  corpus.entries.push_back(build_default_corpus(42).entries[2]);  // U_{1,1}
  const AggregateReport aggregate = verify_all(corpus);
  const json parsed = json::parse(aggregate_report_json(aggregate));
  CHECK(parsed["pass"] == aggregate.pass);
  REQUIRE(parsed["entries"].size() == aggregate.entries[0].reports.size());
  for (std::size_t i = 0; i < aggregate.entries[0].reports.size(); ++i) {
    const IdentityReport& report = aggregate.entries[0].reports[i];
    const json& entry = parsed["entries"][i];
    CHECK(entry["entry"] == aggregate.entries[0].entry);
    CHECK(entry["identity"] == identity_token(report.id));
    CHECK(entry["equal"] == report.equal);
    CHECK(entry["lhs"] == canonical_string(report.lhs));
    CHECK_FALSE(entry.contains("millis"));
  }
}

TEST_CASE("aggregate JSON is byte-identical across runs") {
  const std::string first = aggregate_report_json(
      verify_all(build_default_corpus(42)));
  const std::string second = aggregate_report_json(
      verify_all(build_default_corpus(42)));
  CHECK(first == second);
}

TEST_CASE("axiom report JSON carries the counterexample") {
  const MultiplicityMatroid broken =
      explicit_matroid(1, {0, 1}, {Int(2), Int(3)});
  const AxiomReport report = check_arithmetic_axioms(broken);
  const json parsed = json::parse(axiom_report_json(report, broken));
  CHECK(parsed["matroid_ok"] == true);
  CHECK(parsed["pass"] == false);
  CHECK(parsed["axiom1"]["holds"] == false);
  CHECK(parsed["axiom1"]["counterexample"]["A"].empty());
  CHECK(parsed["axiom1"]["counterexample"]["e"] == 0);
  CHECK(parsed["axiom2"]["holds"] == true);
}

TEST_CASE("token maps cover the command surface") {
  CHECK(poly_kind_from_token("z") == PolyKind::arithmetic_z);
  CHECK(poly_kind_from_token("arith-tutte") == PolyKind::arithmetic_tutte);
  CHECK_FALSE(poly_kind_from_token("nope").has_value());
  CHECK(identity_from_token("backman-lenz") == IdentityId::backman_lenz);
  CHECK(identity_from_token("kook") == IdentityId::classical_kook);
  CHECK_FALSE(identity_from_token("nope").has_value());
}
