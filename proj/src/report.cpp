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

#include "padicmin/report.hpp"

#include <limits>
#include <sstream>

#include "padicmin/poly_text.hpp"

namespace padicmin {

using nlohmann::json;

namespace {

json integer_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

std::string str_of(const json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string join(const json& arr, const char* sep) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += sep;
    out += str_of(v);
  }
  return out;
}

void render_orbit(std::ostringstream& os, const json& o) {
  os << "orbit of " << o["start"].get<std::uint64_t>() << " mod "
     << o["modulus"].get<std::uint64_t>() << ": ";
  const auto& seq = o["sequence"];
  const auto pre = o["preperiod"].get<std::uint64_t>();
  os << join(seq, "->");
  if (!seq.empty()) os << "->" << str_of(seq[pre]);
  os << "\n  preperiod " << pre << ", period " << o["period"] << "\n";
}

void render_check(std::ostringstream& os, const json& r) {
  os << "polynomial: " << str_of(r["input"]["text"]) << " over Z_"
     << r["prime"] << "\n";
  if (!r["normalized"].is_null()) {
    os << "normalized: " << str_of(r["normalized"]["text"]) << "\n";
  }
  os << "verdict: " << str_of(r["verdict"]) << " (method "
     << str_of(r["method"]) << ")\n";
  if (!r["matched_case"].is_null()) {
    os << "case: " << str_of(r["matched_case"]) << "\n";
  }
  if (!r["a0_reading"].is_null()) {
    os << "A0 reading: " << str_of(r["a0_reading"]) << "\n";
  }
  for (const auto& c : r["conditions"]) {
    os << "  [" << (c["passed"].get<bool>() ? "pass" : "FAIL") << "] "
       << str_of(c["congruence"]);
    if (!c["residue"].is_null()) {
      os << "  residue " << c["residue"] << " mod " << c["modulus"];
    }
    os << "\n";
  }
  if (!r["closed_form_verdict"].is_null()) {
    os << "closed form: " << str_of(r["closed_form_verdict"]) << "\n";
  }
  if (!r["oracle_verdict"].is_null()) {
    os << "oracle: " << str_of(r["oracle_verdict"]) << "\n";
  }
  if (!r["witness"].is_null()) render_orbit(os, r["witness"]);
  for (const auto& n : r["notes"]) os << "note: " << str_of(n) << "\n";
}

void render_decompose(std::ostringstream& os, const json& r) {
  os << "decomposition mod " << r["modulus"] << ": " << r["component_count"]
     << " component(s)\n";
  std::size_t i = 0;
  for (const auto& c : r["components"]) {
    os << "  #" << i++ << ": cycle length " << c["cycle_length"] << ", "
       << c["tail_count"] << " tail point(s)";
    if (c.contains("cycle")) {
      os << "\n    cycle: " << join(c["cycle"], " ");
      if (!c["tails"].empty()) os << "\n    tails: " << join(c["tails"], " ");
    }
    os << "\n";
  }
}

void render_family(std::ostringstream& os, const json& f) {
  os << "family: p=" << f["prime"] << ", degree<=" << f["max_degree"]
     << ", coefficients in [" << f["coeff_origin"] << ", "
     << f["coeff_origin"].get<std::int64_t>() +
            f["coeff_modulus"].get<std::int64_t>()
     << "), a0=" << f["constant_term"];
  if (f["mode"] == "sample") {
    os << ", " << f["samples"] << " samples, seed " << f["seed"];
  } else {
    os << ", exhaustive";
  }
  os << "\n";
}

void render_xval(std::ostringstream& os, const json& r) {
  render_family(os, r["family"]);
  os << "checked: " << r["total"] << "\n";
  os << "minimal: " << r["minimal_count"] << "\n";
  if (!r["p3_scores"].is_null()) {
    for (const auto& [reading, count] : r["p3_scores"].items()) {
      os << "mismatches with " << reading << ": " << count << "\n";
    }
    os << "chosen reading: " << str_of(r["p3_reading"]) << "\n";
  }
  os << "mismatches: " << r["mismatches"].size() << "\n";
  for (const auto& m : r["mismatches"]) {
    os << "  " << str_of(m["poly"]["text"]) << ": closed form "
       << str_of(m["closed_form"]) << ", oracle " << str_of(m["oracle"])
       << "\n";
  }
  os << "runtime: " << r["runtime_seconds"].get<double>() << " s ("
     << r["workers"] << " worker(s))\n";
}

void render_find(std::ostringstream& os, const json& r) {
  render_family(os, r["family"]);
  os << "found " << r["found"].size() << " minimal polynomial(s) (limit "
     << r["limit"] << ")\n";
  for (const auto& p : r["found"]) os << "  " << str_of(p["text"]) << "\n";
}

void render_identity(std::ostringstream& os, const json& r) {
  os << "identity suite p=" << r["prime"] << ", " << r["samples"]
     << " samples, seed " << r["seed"] << "\n";
  for (const auto& p : r["properties"]) {
    os << "  " << str_of(p["name"]) << ": " << p["checked"] << " checked, "
       << p["violations"] << " violation(s)\n";
  }
  os << (r["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

}  // namespace

json poly_json(const IntPoly& f) {
  json coeffs = json::array();
  for (const BigInt& c : f.coeffs()) coeffs.push_back(integer_json(c));
  return {{"coeffs", coeffs}, {"degree", f.degree()}, {"text", format_poly(f)}};
}

json orbit_json(const OrbitTrace& t) {
  return {{"start", t.start.value()},
          {"modulus", t.start.modulus().modulus()},
          {"sequence", t.sequence},
          {"preperiod", t.preperiod},
          {"period", t.period},
          {"full_cycle", t.is_full_cycle()}};
}

json report_json(const MinimalityReport& r) {
  json conditions = json::array();
  for (const Condition& c : r.conditions) {
    conditions.push_back({{"name", c.name},
                          {"congruence", c.congruence},
                          {"passed", c.passed},
                          {"residue", c.residue ? json(*c.residue) : json()},
                          {"modulus", c.modulus ? json(*c.modulus) : json()}});
  }
  auto opt_verdict = [](const std::optional<Verdict>& v) {
    return v ? json(std::string(to_string(*v))) : json();
  };
  return {
      {"prime", r.prime.value()},
      {"input", poly_json(r.input)},
      {"normalized", r.normalized ? poly_json(*r.normalized) : json()},
      {"verdict", std::string(to_string(r.verdict))},
      {"method", std::string(to_string(r.method))},
      {"matched_case", r.matched_case ? json(*r.matched_case) : json()},
      {"conditions", conditions},
      {"witness", r.witness ? orbit_json(*r.witness) : json()},
      {"closed_form_verdict", opt_verdict(r.closed_form_verdict)},
      {"oracle_verdict", opt_verdict(r.oracle_verdict)},
      {"criterion_mismatch", r.criterion_mismatch},
      {"a0_reading",
       r.a0_reading ? json(std::string(to_string(*r.a0_reading))) : json()},
      {"notes", r.notes},
  };
}

json decomposition_json(const CycleDecomposition& d, std::size_t max_members) {
  json comps = json::array();
  for (const Component& c : d.components) {
    json j = {{"cycle_length", c.cycle.size()},
              {"tail_count", c.tails.size()},
              {"size", c.size()}};
    if (c.size() <= max_members) {
      j["cycle"] = c.cycle;
      j["tails"] = c.tails;
    }
    comps.push_back(std::move(j));
  }
  return {{"prime", d.level.prime().value()},
          {"level", d.level.level().value()},
          {"modulus", d.level.modulus()},
          {"component_count", d.components.size()},
          {"max_members", max_members},
          {"components", comps}};
}

json family_json(const FamilySpec& f) {
  json j = {{"prime", f.p.value()},
            {"max_degree", f.max_degree},
            {"coeff_modulus", f.coeff_modulus},
            {"coeff_origin", f.coeff_origin},
            {"constant_term", f.constant_term},
            {"cap", f.cap}};
  if (f.sample) {
    j["mode"] = "sample";
    j["samples"] = f.sample->count;
    j["seed"] = f.sample->seed;
  } else {
    j["mode"] = "exhaustive";
  }
  return j;
}

json crossval_json(const CrossValReport& r) {
  json mismatches = json::array();
  for (const Mismatch& m : r.mismatches) {
    mismatches.push_back({{"poly", poly_json(m.poly)},
                          {"closed_form", std::string(to_string(m.closed_form))},
                          {"oracle", std::string(to_string(m.oracle))}});
  }
  json scores;
  if (r.p3_scores) {
    scores = {{std::string(to_string(A0Reading::AsA2)), r.p3_scores->first},
              {std::string(to_string(A0Reading::AsMult6Sum)),
               r.p3_scores->second}};
  }
  return {{"family", family_json(r.family)},
          {"total", r.total},
          {"minimal_count", r.minimal_count},
          {"mismatches", mismatches},
          {"exact", r.mismatches.empty()},
          {"p3_reading", r.p3_reading
                             ? json(std::string(to_string(*r.p3_reading)))
                             : json()},
          {"p3_scores", scores},
          {"runtime_seconds", r.runtime_seconds},
          {"workers", r.workers}};
}

json find_json(const FamilySpec& f, std::uint64_t limit,
               const std::vector<IntPoly>& found) {
  json list = json::array();
  for (const IntPoly& p : found) list.push_back(poly_json(p));
  return {{"family", family_json(f)}, {"limit", limit}, {"found", list}};
}

json identity_json(const IdentitySuiteReport& r) {
  json props = json::array();
  for (const PropertyResult& p : r.properties) {
    props.push_back(
        {{"name", p.name}, {"checked", p.checked}, {"violations", p.violations}});
  }
  return {{"prime", r.p.value()},
          {"samples", r.samples},
          {"seed", r.seed},
          {"properties", props},
          {"passed", r.passed()}};
}

json document(std::string kind, json report) {
  return {{"schema_version", kSchemaVersion},
          {"kind", std::move(kind)},
          {"report", std::move(report)}};
}

std::string render_text(const json& doc) {
  std::ostringstream os;
  const std::string kind = doc.at("kind").get<std::string>();
  const json& r = doc.at("report");
  if (kind == "check") {
    render_check(os, r);
  } else if (kind == "orbit") {
    render_orbit(os, r);
  } else if (kind == "decompose") {
    render_decompose(os, r);
  } else if (kind == "xval") {
    render_xval(os, r);
  } else if (kind == "find") {
    render_find(os, r);
  } else if (kind == "identities") {
    render_identity(os, r);
  } else {
    os << r.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace padicmin
