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

#ifndef ARITHMAT_IO_HPP
#define ARITHMAT_IO_HPP

// The file formats: JSON matroid descriptions in and JSON/text reports
// out. Subset tables are keyed by comma-joined ascending element indices
// ("" is the empty set); multiplicities above 2^63-1 travel as decimal
// strings and readers accept either form.

#include <optional>
#include <string>
#include <vector>

#include "constructors.hpp"
#include "convolution.hpp"
#include "matroid.hpp"
#include "tutte.hpp"

namespace arithmat {

// Parses a spec document; unknown fields and malformed tables are
// rejected with field context in the message.
MatroidSpec parse_spec(const std::string& text);

std::string emit_spec(const MatroidSpec& spec);

std::optional<PolyKind> poly_kind_from_token(const std::string& token);
std::optional<IdentityId> identity_from_token(const std::string& token);

// Identity reports. Symbolic entries carry the canonical polynomial
// strings; probabilistic entries carry the mode and point count instead.
// Millis are omitted when with_millis is false so that corpus reports
// are byte-identical across reruns.
std::string identity_report_json(const IdentityReport& report,
                                 bool with_millis);
std::string identity_report_text(const IdentityReport& report);

// Several identities checked on one input, as one document:
// {"pass": ..., "entries": [...]}.
std::string identity_reports_json(const std::vector<IdentityReport>& reports);

std::string aggregate_report_json(const AggregateReport& aggregate);
std::string aggregate_report_text(const AggregateReport& aggregate);

std::string axiom_report_json(const AxiomReport& report,
                              const MultiplicityMatroid& m);
std::string axiom_report_text(const AxiomReport& report,
                              const MultiplicityMatroid& m);

}  // namespace arithmat

#endif  // ARITHMAT_IO_HPP
