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

#ifndef PADICMIN_HARNESS_HPP
#define PADICMIN_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padicmin/arith.hpp"
#include "padicmin/criteria.hpp"

namespace padicmin {

struct SampleMode {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};

/// Polynomials a_0 + a_1 x + ... + a_d x^d with a_0 fixed and every a_i,
/// 1 <= i <= d, ranging over [coeff_origin, coeff_origin + coeff_modulus).
///
/// Exhaustive members are ordered lexicographically by (a_1, ..., a_d).
struct FamilySpec {
  Prime p{5};
  unsigned max_degree = 1;
  std::uint64_t coeff_modulus = 25;
  std::int64_t coeff_origin = 0;
  std::int64_t constant_term = 1;
  std::optional<SampleMode> sample;  // exhaustive when empty
  std::uint64_t cap = 10'000'000;

  /// Family size, or throws FamilyTooLarge / InvalidArgument.
  std::uint64_t size() const;

  /// The k-th exhaustive member.
  IntPoly member(std::uint64_t k) const;

  /// Modulus p^delta, the default coefficient range.
  static std::uint64_t default_modulus(Prime p);
};

struct Mismatch {
  IntPoly poly;
  Verdict closed_form;
  Verdict oracle;
};

struct CrossValReport {
  FamilySpec family;
  std::uint64_t total = 0;
  std::uint64_t minimal_count = 0;
  /// Sorted by coefficients. For p = 3 these belong to the chosen reading.
  std::vector<Mismatch> mismatches;
  std::optional<A0Reading> p3_reading;
  /// Mismatch counts for {AsA2, AsMult6Sum}; p = 3 only.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> p3_scores;
  double runtime_seconds = 0.0;
  unsigned workers = 1;
};

/// Closed form versus oracle on every family member.
///
/// Results are identical for any worker count. Throws FamilyTooLarge and
/// UnsupportedPrime.
CrossValReport cross_validate(const FamilySpec& spec, unsigned workers = 0);

/// First `limit` members whose oracle verdict is Minimal, in family order.
std::vector<IntPoly> find_minimal(const FamilySpec& spec, std::uint64_t limit,
                                  unsigned workers = 0);

struct PropertyResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
};

struct IdentitySuiteReport {
  Prime p{5};
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;

  bool passed() const noexcept;
};

/// Random polynomials of degree <= 8 with coefficients in [-100, 100] and a
/// unit constant term, checked against identities that must always hold:
/// the derivative-product identity (p = 5), conjugacy invariance of the
/// oracle, the full-cycle projection chain and the lifting equivalence.
IdentitySuiteReport identity_suite(Prime p, std::uint64_t samples,
                                   std::uint64_t seed);

/// The generator behind identity_suite and Sample families, exposed for
/// tests. Member k depends only on (seed, k).
std::vector<std::int64_t> sample_coefficients(std::uint64_t seed,
                                              std::uint64_t k, std::size_t count,
                                              std::int64_t lo, std::int64_t hi);

}  // namespace padicmin

#endif  // PADICMIN_HARNESS_HPP
