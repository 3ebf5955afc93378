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

// padicmin: minimality of polynomial maps on the p-adic integers.
//
// Exit status: 0 evaluated, 1 xval found a mismatch, 2 error.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "padicmin/criteria.hpp"
#include "padicmin/dynamics.hpp"
#include "padicmin/harness.hpp"
#include "padicmin/poly_text.hpp"
#include "padicmin/report.hpp"

namespace {

using namespace padicmin;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

struct GlobalOptions {
  std::string format = "text";
  std::uint64_t seed = 42;
  std::uint64_t cap = 10'000'000;
  unsigned threads = 0;
};

struct FamilyOptions {
  std::uint64_t prime = 5;
  unsigned max_degree = 1;
  std::optional<std::uint64_t> coeff_modulus;
  std::int64_t coeff_origin = 0;
  std::int64_t constant_term = 1;
  bool exhaustive = false;
  std::optional<std::uint64_t> samples;
};

void add_family_options(CLI::App* cmd, FamilyOptions& o) {
  cmd->add_option("--prime,-p", o.prime, "Prime p")->required();
  cmd->add_option("--max-degree", o.max_degree, "Maximum degree d")->required();
  cmd->add_option("--coeff-modulus", o.coeff_modulus,
                  "Coefficients range over this many values (default p^delta)");
  cmd->add_option("--coeff-origin", o.coeff_origin,
                  "Smallest coefficient value (default 0)");
  cmd->add_option("--constant-term", o.constant_term, "Fixed a0 (default 1)");
  auto* ex = cmd->add_flag("--exhaustive", o.exhaustive, "Enumerate the family");
  auto* sm = cmd->add_option("--samples", o.samples, "Sample this many members");
  ex->excludes(sm);
}

FamilySpec make_family(const FamilyOptions& o, const GlobalOptions& g) {
  FamilySpec spec;
  spec.p = Prime(o.prime);
  spec.max_degree = o.max_degree;
  spec.coeff_modulus =
      o.coeff_modulus.value_or(FamilySpec::default_modulus(spec.p));
  spec.coeff_origin = o.coeff_origin;
  spec.constant_term = o.constant_term;
  spec.cap = g.cap;
  if (o.samples) spec.sample = SampleMode{*o.samples, g.seed};
  return spec;
}

void emit(const GlobalOptions& g, const nlohmann::json& doc) {
  if (g.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << render_text(doc);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimality of polynomial dynamical systems on Z_p"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for sampled families and suites")
      ->capture_default_str();
  app.add_option("--cap", g.cap, "Largest exhaustive family allowed")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)");

  std::string poly_text;
  std::uint64_t prime = 0;
  unsigned level = 1;

  auto* check = app.add_subcommand("check", "Decide minimality of f on Z_p");
  std::optional<std::string> mode_text;
  std::string reading_text = "A2";
  check->add_option("--poly,-f", poly_text, "Coefficient list or expression")
      ->required();
  check->add_option("--prime,-p", prime, "Prime p")->required();
  check->add_option("--mode", mode_text,
                    "closed-form, oracle or both (default both for p <= 5)")
      ->check(CLI::IsMember({"closed-form", "oracle", "both"}));
  check->add_option("--a0-reading", reading_text,
                    "p = 3 only: A2 or mult6 for the A0 term")
      ->check(CLI::IsMember({"A2", "mult6"}));

  auto* orbit_cmd = app.add_subcommand("orbit", "Orbit of a point modulo p^n");
  std::uint64_t start = 0;
  orbit_cmd->add_option("--poly,-f", poly_text, "Polynomial")->required();
  orbit_cmd->add_option("--prime,-p", prime, "Prime p")->required();
  orbit_cmd->add_option("--level,-n", level, "Level n")->required();
  orbit_cmd->add_option("--start", start, "Start point in [0, p^n)");

  auto* decompose = app.add_subcommand(
      "decompose", "Split Z/p^nZ into cycles with their tails");
  std::size_t max_members = 64;
  decompose->add_option("--poly,-f", poly_text, "Polynomial")->required();
  decompose->add_option("--prime,-p", prime, "Prime p")->required();
  decompose->add_option("--level,-n", level, "Level n")->required();
  decompose->add_option("--max-members", max_members,
                        "List members only for components up to this size")
      ->capture_default_str();

  FamilyOptions family;
  auto* xval = app.add_subcommand(
      "xval", "Cross-validate the closed form against the oracle");
  add_family_options(xval, family);

  auto* find = app.add_subcommand("find", "List minimal family members");
  std::uint64_t limit = 10;
  add_family_options(find, family);
  find->add_option("--limit", limit, "How many to list")->capture_default_str();

  auto* identities = app.add_subcommand(
      "identities", "Randomized identity and structural property suite");
  std::uint64_t samples = 10000;
  identities->add_option("--prime,-p", prime, "Prime p")->required();
  identities->add_option("--samples", samples, "Number of random polynomials")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*check) {
      const IntPoly f = parse_poly(poly_text);
      const Prime p(prime);
      Method mode = LevelPolicy::for_prime(p).has_closed_form() ? Method::Both
                                                                : Method::Oracle;
      if (mode_text) {
        static const std::map<std::string, Method> kModes{
            {"closed-form", Method::ClosedForm},
            {"oracle", Method::Oracle},
            {"both", Method::Both}};
        mode = kModes.at(*mode_text);
      }
      const A0Reading reading =
          reading_text == "A2" ? A0Reading::AsA2 : A0Reading::AsMult6Sum;
      emit(g, document("check", report_json(check_minimal(f, p, mode, reading))));
      return kExitOk;
    }
    if (*orbit_cmd) {
      const IntPoly f = parse_poly(poly_text);
      const PrimePower pn{Prime(prime), Level(level)};
      emit(g, document("orbit", orbit_json(orbit(f, Residue(start, pn)))));
      return kExitOk;
    }
    if (*decompose) {
      const IntPoly f = parse_poly(poly_text);
      const PrimePower pn{Prime(prime), Level(level)};
      emit(g, document("decompose", decomposition_json(
                                        minimal_decomposition(f, pn),
                                        max_members)));
      return kExitOk;
    }
    if (*xval) {
      if (!family.exhaustive && !family.samples) {
        throw InvalidArgument("xval needs --exhaustive or --samples N");
      }
      const CrossValReport r = cross_validate(make_family(family, g), g.threads);
      emit(g, document("xval", crossval_json(r)));
      return r.mismatches.empty() ? kExitOk : kExitMismatch;
    }
    if (*find) {
      const FamilySpec spec = make_family(family, g);
      emit(g, document("find", find_json(spec, limit,
                                         find_minimal(spec, limit, g.threads))));
      return kExitOk;
    }
    if (*identities) {
      const IdentitySuiteReport r = identity_suite(Prime(prime), samples, g.seed);
      emit(g, document("identities", identity_json(r)));
      return r.passed() ? kExitOk : kExitMismatch;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
