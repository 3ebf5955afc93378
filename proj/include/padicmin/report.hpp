// Copyright 2026 The padicmin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PADICMIN_REPORT_HPP
#define PADICMIN_REPORT_HPP

// Machine-readable report documents and their human-readable rendering.
//
// Every command produces one JSON document
//   {"schema_version": 1, "kind": "<command>", "report": {...}}
// and the text format is rendered from that document alone.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "padicmin/criteria.hpp"
#include "padicmin/dynamics.hpp"
#include "padicmin/harness.hpp"

namespace padicmin {

inline constexpr int kSchemaVersion = 1;

nlohmann::json poly_json(const IntPoly& f);
nlohmann::json orbit_json(const OrbitTrace& t);
nlohmann::json report_json(const MinimalityReport& r);
/// Member lists of components larger than max_members are omitted.
nlohmann::json decomposition_json(const CycleDecomposition& d,
                                  std::size_t max_members);
nlohmann::json family_json(const FamilySpec& f);
nlohmann::json crossval_json(const CrossValReport& r);
nlohmann::json find_json(const FamilySpec& f, std::uint64_t limit,
                         const std::vector<IntPoly>& found);
nlohmann::json identity_json(const IdentitySuiteReport& r);

/// Wraps a report in the versioned envelope.
nlohmann::json document(std::string kind, nlohmann::json report);

/// Human-readable rendering of a document produced by document().
std::string render_text(const nlohmann::json& doc);

}  // namespace padicmin

#endif  // PADICMIN_REPORT_HPP
