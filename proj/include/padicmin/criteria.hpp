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

#ifndef PADICMIN_CRITERIA_HPP
#define PADICMIN_CRITERIA_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "padicmin/arith.hpp"
#include "padicmin/dynamics.hpp"

namespace padicmin {

// Closed-form minimality criteria for polynomial maps on Z_p, p in {2, 3, 5}.
//
// Every criterion assumes f(0) = 1; callers normalize first. The coefficient
// sums group a_i by the class of i modulo p - 1 (parity for p = 2, 3 and
// i mod 4 for p = 5), always over i >= 1.

struct DerivedTermsP2 {
  BigInt a1, a2;
  BigInt A1;  // sum of a_i, i odd
  BigInt A2;  // sum of a_i, i even, i >= 2
};

struct DerivedTermsP3 {
  BigInt a1, a2;
  BigInt A1, A2;
  BigInt D1;   // f'(1)
  BigInt Dm1;  // f'(-1)
  BigInt S2;   // a_2 + a_8 + a_14 + ...
  BigInt S5;   // a_5 + a_11 + a_17 + ...
  BigInt S6;   // a_6 + a_12 + a_18 + ...
};

/// Labels I..VI of the six full cycles of f on Z/5Z with f(0) = 1.
enum class P5Case : std::uint8_t { I, II, III, IV, V, VI };

std::string_view to_string(P5Case c) noexcept;

/// (A1, A2, A3, A4) mod 5 that select each case.
std::array<std::uint64_t, 4> case_base(P5Case c) noexcept;

struct DerivedTermsP5 {
  BigInt a1;
  std::array<BigInt, 4> A;  // A1, A2, A3, A4 (index i with i = r mod 4)
  /// f'(1), f'(-1), f'(2), f'(-2) exactly and mod 5.
  std::array<BigInt, 4> D_exact;
  std::uint64_t D1 = 0, Dm1 = 0, D2 = 0, Dm2 = 0;
  std::optional<P5Case> matched;
  /// (A_r - base_r) / 5 mod 5, present iff a case matched.
  std::optional<std::array<std::uint64_t, 4>> alpha;
};

using DerivedTerms = std::variant<DerivedTermsP2, DerivedTermsP3, DerivedTermsP5>;

DerivedTermsP2 derived_terms_p2(const IntPoly& f);
DerivedTermsP3 derived_terms_p3(const IntPoly& f);
DerivedTermsP5 derived_terms_p5(const IntPoly& f);

/// Dispatches on p. Throws UnsupportedPrime for p outside {2, 3, 5} and
/// NotNormalized when a_0 != 1.
DerivedTerms derived_terms(const IntPoly& f, Prime p);

enum class Verdict : std::uint8_t { Minimal, NotMinimal };
enum class Method : std::uint8_t { ClosedForm, Oracle, Both };

/// Reading of the symbol A_0 in rows II and IV of the p = 3 table.
enum class A0Reading : std::uint8_t {
  AsA2,        // A_0 := A_2
  AsMult6Sum,  // A_0 := a_6 + a_12 + ...
};

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Method m) noexcept;
std::string_view to_string(A0Reading r) noexcept;

/// One evaluated congruence of a criterion.
struct Condition {
  std::string name;
  std::string congruence;
  bool passed = false;
  std::optional<std::int64_t> residue;
  std::optional<std::int64_t> modulus;
};

struct MinimalityReport {
  Prime prime{2};
  IntPoly input;
  std::optional<IntPoly> normalized;
  Verdict verdict = Verdict::NotMinimal;
  Method method = Method::ClosedForm;
  std::optional<std::string> matched_case;
  std::vector<Condition> conditions;
  std::optional<OrbitTrace> witness;
  std::optional<Verdict> closed_form_verdict;
  std::optional<Verdict> oracle_verdict;
  /// Set when closed form and oracle disagree; the oracle verdict wins.
  bool criterion_mismatch = false;
  std::optional<A0Reading> a0_reading;
  std::vector<std::string> notes;
};

MinimalityReport check_p2(const IntPoly& f);
MinimalityReport check_p3(const IntPoly& f, A0Reading reading = A0Reading::AsA2);
MinimalityReport check_p5(const IntPoly& f);

/// Normalizes f, runs the requested method(s) and merges the result.
/// A constant term divisible by p short-circuits to NotMinimal.
MinimalityReport check_minimal(const IntPoly& f, Prime p, Method mode,
                               A0Reading reading = A0Reading::AsA2);

/// Closed-form verdict only, without building a report. f must be
/// normalized.
Verdict closed_form_verdict(const IntPoly& f, Prime p,
                            A0Reading reading = A0Reading::AsA2);

/// prod_{i<p} f'(f^i(0)) mod p, i.e. (f^p)'(0) mod p.
std::uint64_t chain_rule_product(const IntPoly& f, Prime p);

}  // namespace padicmin

#endif  // PADICMIN_CRITERIA_HPP
