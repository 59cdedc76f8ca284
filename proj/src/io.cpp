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

#include "io.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

#include "error.hpp"
#include "json.hpp"

namespace arithmat {

namespace {

using nlohmann::json;

const Int kInt64Max(std::numeric_limits<std::int64_t>::max());
const Int kInt64Min(std::numeric_limits<std::int64_t>::min());

json int_to_json(const Int& value) {
  if (value >= kInt64Min && value <= kInt64Max)
    return value.convert_to<std::int64_t>();
  return value.str();
}

Int int_from_json(const json& value, const std::string& context) {
  if (value.is_number_integer()) return Int(value.get<std::int64_t>());
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    try {
      return Int(text);
    } catch (const std::exception&) {
      throw Error(ErrorCode::malformed_document,
                  context + ": not a decimal integer: \"" + text + "\"");
    }
  }
  throw Error(ErrorCode::malformed_document,
              context + ": expected an integer or a decimal string");
}

int small_int_from_json(const json& value, const std::string& context) {
  if (!value.is_number_integer())
    throw Error(ErrorCode::malformed_document, context + ": expected an integer");
  const std::int64_t wide = value.get<std::int64_t>();
  if (wide < -(1 << 30) || wide > (1 << 30))
    throw Error(ErrorCode::malformed_document, context + ": out of range");
  return static_cast<int>(wide);
}

SubsetMask parse_subset_key(const std::string& key, int n) {
  if (key.empty()) return 0;
  SubsetMask mask = 0;
  int previous = -1;
  std::size_t pos = 0;
  while (pos < key.size()) {
    std::size_t end = key.find(',', pos);
    if (end == std::string::npos) end = key.size();
    const std::string token = key.substr(pos, end - pos);
    if (token.empty() ||
        token.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::bad_subset_key, "\"" + key + "\"");
    const long element = std::strtol(token.c_str(), nullptr, 10);
    if (element <= previous || element >= n)
      throw Error(ErrorCode::bad_subset_key,
                  "\"" + key + "\": indices must be ascending and below " +
                      std::to_string(n));
    previous = static_cast<int>(element);
    mask |= SubsetMask(1) << element;
    pos = end + 1;
    if (end == key.size()) break;
  }
  if (!key.empty() && key.back() == ',')
    throw Error(ErrorCode::bad_subset_key, "\"" + key + "\"");
  return mask;
}

std::string subset_key_string(SubsetMask mask) {
  std::string out;
  bool first = true;
  for (int e : mask_elements(mask)) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(e);
  }
  return out;
}

// Subset-keyed table; subsets may be omitted only when a "default" entry
// supplies the fill value.
template <typename Value, typename FromJson>
std::vector<Value> parse_subset_table(const json& object, int n,
                                      const std::string& context,
                                      FromJson&& from_json) {
  if (!object.is_object())
    throw Error(ErrorCode::malformed_document,
                context + ": expected an object keyed by subsets");
  std::optional<Value> fill;
  std::vector<std::optional<Value>> table(std::size_t(1) << n);
  for (const auto& [key, value] : object.items()) {
    if (key == "default") {
      fill = from_json(value, context + ".default");
      continue;
    }
    const SubsetMask mask = parse_subset_key(key, n);
    table[mask] = from_json(value, context + "[\"" + key + "\"]");
  }
  std::vector<Value> out(table.size());
  for (SubsetMask mask = 0; mask < table.size(); ++mask) {
    if (table[mask]) {
      out[mask] = *table[mask];
    } else if (fill) {
      out[mask] = *fill;
    } else {
      throw Error(ErrorCode::table_size_mismatch,
                  context + ": missing subset \"" + subset_key_string(mask) +
                      "\" and no default given");
    }
  }
  return out;
}

std::vector<Int> parse_multiplicity_table(const json& object, int n,
                                          const std::string& context) {
  return parse_subset_table<Int>(object, n, context, int_from_json);
}

std::vector<int> parse_rank_table(const json& object, int n,
                                  const std::string& context) {
  return parse_subset_table<int>(object, n, context, small_int_from_json);
}

void reject_unknown_fields(const json& document,
                           const std::set<std::string>& allowed) {
  for (const auto& [key, value] : document.items())
    if (!allowed.contains(key))
      throw Error(ErrorCode::malformed_document, "unknown field \"" + key + "\"");
}

json table_to_json(const std::vector<Int>& table) {
  json out = json::object();
  for (SubsetMask mask = 0; mask < table.size(); ++mask)
    out[subset_key_string(mask)] = int_to_json(table[mask]);
  return out;
}

json rank_table_to_json(const std::vector<int>& table) {
  json out = json::object();
  for (SubsetMask mask = 0; mask < table.size(); ++mask)
    out[subset_key_string(mask)] = table[mask];
  return out;
}

}  // namespace

MatroidSpec parse_spec(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& error) {
    throw Error(ErrorCode::malformed_document, error.what());
  }
  if (!document.is_object())
    throw Error(ErrorCode::malformed_document, "top level must be an object");
  if (!document.contains("kind") || !document["kind"].is_string())
    throw Error(ErrorCode::malformed_document, "missing string field \"kind\"");
  const std::string kind = document["kind"].get<std::string>();

  MatroidSpec spec;
  if (kind == "uniform") {
    reject_unknown_fields(document, {"kind", "rank", "size", "multiplicity"});
    if (!document.contains("rank") || !document.contains("size"))
      throw Error(ErrorCode::malformed_document,
                  "uniform needs \"rank\" and \"size\"");
    spec.kind = MatroidSpec::Kind::uniform;
    spec.rank = small_int_from_json(document["rank"], "rank");
    spec.size = small_int_from_json(document["size"], "size");
    if (spec.size < 0 || spec.size > kGroundSetCap)
      throw Error(ErrorCode::ground_set_too_large, std::to_string(spec.size));
    if (document.contains("multiplicity"))
      spec.multiplicity = parse_multiplicity_table(document["multiplicity"],
                                                   spec.size, "multiplicity");
  } else if (kind == "graphic") {
    reject_unknown_fields(document, {"kind", "vertices", "edges"});
    if (!document.contains("vertices") || !document.contains("edges"))
      throw Error(ErrorCode::malformed_document,
                  "graphic needs \"vertices\" and \"edges\"");
    spec.kind = MatroidSpec::Kind::graphic;
    spec.vertices = small_int_from_json(document["vertices"], "vertices");
    if (!document["edges"].is_array())
      throw Error(ErrorCode::malformed_document, "\"edges\" must be an array");
    for (const json& edge : document["edges"]) {
      if (!edge.is_array() || edge.size() != 2)
        throw Error(ErrorCode::malformed_document,
                    "each edge must be a pair [from, to]");
      spec.edges.push_back({small_int_from_json(edge[0], "edge endpoint"),
                            small_int_from_json(edge[1], "edge endpoint")});
    }
  } else if (kind == "matrix") {
    reject_unknown_fields(document, {"kind", "columns"});
    if (!document.contains("columns") || !document["columns"].is_array())
      throw Error(ErrorCode::malformed_document,
                  "matrix needs an array field \"columns\"");
    spec.kind = MatroidSpec::Kind::matrix;
    for (const json& column : document["columns"]) {
      if (!column.is_array())
        throw Error(ErrorCode::malformed_document, "each column must be an array");
      std::vector<Int> entries;
      for (const json& entry : column)
        entries.push_back(int_from_json(entry, "matrix entry"));
      spec.columns.push_back(std::move(entries));
    }
  } else if (kind == "explicit") {
    reject_unknown_fields(document, {"kind", "size", "rank", "multiplicity"});
    if (!document.contains("size") || !document.contains("rank") ||
        !document.contains("multiplicity"))
      throw Error(ErrorCode::malformed_document,
                  "explicit needs \"size\", \"rank\" and \"multiplicity\"");
    spec.kind = MatroidSpec::Kind::explicit_table;
    spec.size = small_int_from_json(document["size"], "size");
    if (spec.size < 0 || spec.size > kGroundSetCap)
      throw Error(ErrorCode::ground_set_too_large, std::to_string(spec.size));
    spec.rank_table = parse_rank_table(document["rank"], spec.size, "rank");
    spec.multiplicity = parse_multiplicity_table(document["multiplicity"],
                                                 spec.size, "multiplicity");
  } else {
    throw Error(ErrorCode::unknown_kind, "\"" + kind + "\"");
  }
  return spec;
}

std::string emit_spec(const MatroidSpec& spec) {
  json document;
  switch (spec.kind) {
    case MatroidSpec::Kind::uniform:
      document["kind"] = "uniform";
      document["rank"] = spec.rank;
      document["size"] = spec.size;
      if (spec.multiplicity)
        document["multiplicity"] = table_to_json(*spec.multiplicity);
      break;
    case MatroidSpec::Kind::graphic: {
      document["kind"] = "graphic";
      document["vertices"] = spec.vertices;
      json edges = json::array();
      for (const auto& [from, to] : spec.edges)
        edges.push_back(json::array({from, to}));
      document["edges"] = edges;
      break;
    }
    case MatroidSpec::Kind::matrix: {
      document["kind"] = "matrix";
      json columns = json::array();
      for (const auto& column : spec.columns) {
        json entries = json::array();
        for (const Int& entry : column) entries.push_back(int_to_json(entry));
        columns.push_back(entries);
      }
      document["columns"] = columns;
      break;
    }
    case MatroidSpec::Kind::explicit_table:
      document["kind"] = "explicit";
      document["size"] = spec.size;
      document["rank"] = rank_table_to_json(spec.rank_table);
      document["multiplicity"] = table_to_json(*spec.multiplicity);
      break;
  }
  return document.dump(2);
}

std::optional<PolyKind> poly_kind_from_token(const std::string& token) {
  if (token == "z") return PolyKind::arithmetic_z;
  if (token == "sokal-z") return PolyKind::sokal_z;
  if (token == "tutte") return PolyKind::tutte;
  if (token == "arith-tutte") return PolyKind::arithmetic_tutte;
  if (token == "char") return PolyKind::characteristic;
  return std::nullopt;
}

std::optional<IdentityId> identity_from_token(const std::string& token) {
  if (token == "product-mv") return IdentityId::product_multivariate;
  if (token == "product-uv") return IdentityId::product_univariate;
  if (token == "single-mv") return IdentityId::single_multivariate;
  if (token == "single-uv") return IdentityId::single_univariate;
  if (token == "dupont") return IdentityId::dupont_abcd;
  if (token == "backman-lenz") return IdentityId::backman_lenz;
  if (token == "mixed") return IdentityId::mixed_tutte;
  if (token == "char") return IdentityId::char_convolution;
  if (token == "kook") return IdentityId::classical_kook;
  return std::nullopt;
}

namespace {

json identity_entry(const IdentityReport& report, bool with_millis) {
  json entry;
  entry["identity"] = identity_token(report.id);
  entry["equal"] = report.equal;
  if (report.probabilistic) {
    entry["mode"] = "probabilistic";
    entry["points"] = report.points;
  } else {
    entry["lhs"] = canonical_string(report.lhs);
    entry["rhs1"] = canonical_string(report.rhs_first);
    if (report.rhs_second) entry["rhs2"] = canonical_string(*report.rhs_second);
  }
  if (with_millis) entry["millis"] = report.millis;
  return entry;
}

std::string format_millis(double millis) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3f", millis);
  return buffer;
}

}  // namespace

std::string identity_report_json(const IdentityReport& report,
                                 bool with_millis) {
  return identity_entry(report, with_millis).dump(2);
}

std::string identity_reports_json(const std::vector<IdentityReport>& reports) {
  json document;
  bool pass = true;
  json entries = json::array();
  for (const IdentityReport& report : reports) {
    pass = pass && report.equal;
    entries.push_back(identity_entry(report, /*with_millis=*/true));
  }
  document["pass"] = pass;
  document["entries"] = entries;
  return document.dump(2);
}

std::string identity_report_text(const IdentityReport& report) {
  std::ostringstream out;
  out << "identity: " << identity_token(report.id) << "\n";
  if (report.probabilistic) {
    out << "mode: probabilistic (" << report.points << " points)\n";
  } else {
    out << "lhs:  " << canonical_string(report.lhs) << "\n";
    out << "rhs1: " << canonical_string(report.rhs_first) << "\n";
    if (report.rhs_second)
      out << "rhs2: " << canonical_string(*report.rhs_second) << "\n";
  }
  out << "equal: " << (report.equal ? "yes" : "no") << "\n";
  out << "time: " << format_millis(report.millis) << " ms\n";
  return out.str();
}

std::string aggregate_report_json(const AggregateReport& aggregate) {
  json document;
  document["pass"] = aggregate.pass;
  json entries = json::array();
  for (const AggregateEntry& entry : aggregate.entries) {
    if (entry.error) {
      json item;
      item["entry"] = entry.entry;
      item["error"] = *entry.error;
      entries.push_back(item);
      continue;
    }
    for (const IdentityReport& report : entry.reports) {
      json item = identity_entry(report, /*with_millis=*/false);
      item["entry"] = entry.entry;
      entries.push_back(item);
    }
  }
  document["entries"] = entries;
  return document.dump(2);
}

std::string aggregate_report_text(const AggregateReport& aggregate) {
  std::ostringstream out;
  for (const AggregateEntry& entry : aggregate.entries) {
    out << entry.entry << ":";
    if (entry.error) {
      out << " error: " << *entry.error << "\n";
      continue;
    }
    for (const IdentityReport& report : entry.reports)
      out << " " << identity_token(report.id) << "="
          << (report.equal ? "ok" : "FAIL");
    out << "\n";
  }
  out << "pass: " << (aggregate.pass ? "yes" : "no") << "\n";
  return out.str();
}

namespace {

json witness_json(const CheckWitness& witness,
                  const MultiplicityMatroid& m) {
  json out;
  for (const auto& [name, mask] : witness.parts) {
    if (name == "e") {
      out[name] = m.label(mask_elements(mask)[0]);
      continue;
    }
    json elements = json::array();
    for (int e : mask_elements(mask)) elements.push_back(m.label(e));
    out[name] = elements;
  }
  return out;
}

std::string witness_text(const CheckWitness& witness,
                         const MultiplicityMatroid& m) {
  std::string out;
  for (const auto& [name, mask] : witness.parts) {
    if (!out.empty()) out += ", ";
    if (name == "e") {
      out += name + "=" + std::to_string(m.label(mask_elements(mask)[0]));
      continue;
    }
    out += name + "={";
    bool first = true;
    for (int e : mask_elements(mask)) {
      if (!first) out += ",";
      first = false;
      out += std::to_string(m.label(e));
    }
    out += "}";
  }
  return out;
}

}  // namespace

std::string axiom_report_json(const AxiomReport& report,
                              const MultiplicityMatroid& m) {
  json document;
  document["matroid_ok"] = report.matroid_ok;
  const auto fill = [&](const char* name, const AxiomCheck& check) {
    json value;
    value["holds"] = check.ok;
    if (check.witness) value["counterexample"] = witness_json(*check.witness, m);
    document[name] = value;
  };
  fill("axiom1", report.axiom1);
  fill("axiom2", report.axiom2);
  fill("axiom3", report.axiom3);
  fill("axiom4", report.axiom4);
  document["pass"] = report.all_ok();
  return document.dump(2);
}

std::string axiom_report_text(const AxiomReport& report,
                              const MultiplicityMatroid& m) {
  std::ostringstream out;
  out << "matroid axioms: " << (report.matroid_ok ? "ok" : "FAIL") << "\n";
  const auto line = [&](const char* name, const AxiomCheck& check) {
    out << name << ": " << (check.ok ? "ok" : "FAIL");
    if (check.witness) out << " at " << witness_text(*check.witness, m);
    out << "\n";
  };
  line("axiom (1) divisibility", report.axiom1);
  line("axiom (2) molecule product", report.axiom2);
  line("axiom (3) alternating sums", report.axiom3);
  line("axiom (4) dual alternating sums", report.axiom4);
  out << "pass: " << (report.all_ok() ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace arithmat
