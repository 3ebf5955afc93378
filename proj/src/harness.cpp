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

#include "padicmin/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "padicmin/dynamics.hpp"

namespace padicmin {

namespace {

constexpr std::uint64_t kShardSize = 4096;

unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(shard) for every shard in [0, shards) on `workers` threads.
template <typename Body>
void for_each_shard(std::uint64_t shards, unsigned workers, Body&& body) {
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(std::max<std::uint64_t>(shards, 1), workers));
  std::atomic<std::uint64_t> next{0};
  auto run = [&] {
    for (std::uint64_t s = next++; s < shards; s = next++) body(s);
  };
  if (workers <= 1) {
    run();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
}

IntPoly sample_member(const FamilySpec& spec, std::uint64_t k) {
  const auto hi = spec.coeff_origin +
                  static_cast<std::int64_t>(spec.coeff_modulus) - 1;
  auto digits = sample_coefficients(spec.sample->seed, k, spec.max_degree,
                                    spec.coeff_origin, hi);
  std::vector<BigInt> coeffs;
  coeffs.reserve(digits.size() + 1);
  coeffs.emplace_back(spec.constant_term);
  for (auto d : digits) coeffs.emplace_back(d);
  return IntPoly(std::move(coeffs));
}

IntPoly family_member(const FamilySpec& spec, std::uint64_t k) {
  return spec.sample ? sample_member(spec, k) : spec.member(k);
}

struct ShardResult {
  std::uint64_t minimal = 0;
  std::array<std::vector<Mismatch>, 2> mismatches;  // per A0 reading
};

}  // namespace

std::uint64_t FamilySpec::default_modulus(Prime p) {
  return LevelPolicy::for_prime(p).modulus().modulus();
}

std::uint64_t FamilySpec::size() const {
  if (max_degree < 1) {
    throw InvalidArgument("max_degree must be at least 1");
  }
  if (coeff_modulus < 1) {
    throw InvalidArgument("coeff_modulus must be at least 1");
  }
  if (sample) return sample->count;
  std::uint64_t n = 1;
  for (unsigned i = 0; i < max_degree; ++i) {
    if (n > cap / coeff_modulus) {
      throw FamilyTooLarge(std::to_string(coeff_modulus) + "^" +
                           std::to_string(max_degree) +
                           " polynomials exceed the cap of " +
                           std::to_string(cap));
    }
    n *= coeff_modulus;
  }
  return n;
}

IntPoly FamilySpec::member(std::uint64_t k) const {
  std::vector<BigInt> coeffs(max_degree + 1);
  coeffs[0] = constant_term;
  for (unsigned i = max_degree; i >= 1; --i) {
    coeffs[i] = coeff_origin + static_cast<std::int64_t>(k % coeff_modulus);
    k /= coeff_modulus;
  }
  return IntPoly(std::move(coeffs));
}

std::vector<std::int64_t> sample_coefficients(std::uint64_t seed,
                                              std::uint64_t k, std::size_t count,
                                              std::int64_t lo, std::int64_t hi) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k),
                    static_cast<std::uint32_t>(k >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  std::vector<std::int64_t> out(count);
  for (auto& c : out) c = dist(rng);
  return out;
}

CrossValReport cross_validate(const FamilySpec& spec, unsigned workers) {
  const auto started = std::chrono::steady_clock::now();
  const std::uint64_t total = spec.size();
  const LevelPolicy policy = LevelPolicy::for_prime(spec.p);
  if (!policy.has_closed_form()) {
    throw UnsupportedPrime("no closed-form criterion for p = " +
                           std::to_string(spec.p.value()));
  }
  const bool two_readings = spec.p.value() == 3;
  const PrimePower top = policy.modulus();

  workers = resolve_workers(workers);
  const std::uint64_t shards = (total + kShardSize - 1) / kShardSize;
  std::vector<ShardResult> results(shards);

  for_each_shard(shards, workers, [&](std::uint64_t s) {
    ShardResult& out = results[s];
    const std::uint64_t end = std::min(total, (s + 1) * kShardSize);
    for (std::uint64_t k = s * kShardSize; k < end; ++k) {
      IntPoly f = family_member(spec, k);
      const Verdict oracle = full_cycle_check(f, top) ? Verdict::Minimal
                                                      : Verdict::NotMinimal;
      if (oracle == Verdict::Minimal) ++out.minimal;

      const bool unit = f.coeffs().front() % spec.p.value() != 0;
      std::optional<IntPoly> g;
      if (unit) g = normalize(f, spec.p);
      for (int r = 0; r < (two_readings ? 2 : 1); ++r) {
        const Verdict closed =
            unit ? closed_form_verdict(*g, spec.p, static_cast<A0Reading>(r))
                 : Verdict::NotMinimal;
        if (closed != oracle) out.mismatches[r].push_back({f, closed, oracle});
      }
    }
  });

  CrossValReport report;
  report.family = spec;
  report.total = total;
  report.workers = workers;
  std::array<std::vector<Mismatch>, 2> mismatches;
  for (ShardResult& r : results) {
    report.minimal_count += r.minimal;
    for (int i = 0; i < 2; ++i) {
      std::move(r.mismatches[i].begin(), r.mismatches[i].end(),
                std::back_inserter(mismatches[i]));
    }
  }
  for (auto& list : mismatches) {
    std::stable_sort(list.begin(), list.end(),
                     [](const Mismatch& a, const Mismatch& b) {
                       return a.poly < b.poly;
                     });
  }

  int chosen = 0;
  if (two_readings) {
    report.p3_scores = {mismatches[0].size(), mismatches[1].size()};
    if (mismatches[1].size() < mismatches[0].size()) chosen = 1;
    report.p3_reading = static_cast<A0Reading>(chosen);
  }
  report.mismatches = std::move(mismatches[chosen]);
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return report;
}

std::vector<IntPoly> find_minimal(const FamilySpec& spec, std::uint64_t limit,
                                  unsigned workers) {
  const std::uint64_t total = spec.size();
  const PrimePower top = LevelPolicy::for_prime(spec.p).modulus();
  workers = resolve_workers(workers);
  const std::uint64_t shards = (total + kShardSize - 1) / kShardSize;
  const std::uint64_t window = std::max<std::uint64_t>(1, 4ull * workers);

  std::vector<IntPoly> found;
  for (std::uint64_t first = 0; first < shards && found.size() < limit;
       first += window) {
    const std::uint64_t count = std::min(window, shards - first);
    std::vector<std::vector<IntPoly>> hits(count);
    for_each_shard(count, workers, [&](std::uint64_t i) {
      const std::uint64_t s = first + i;
      const std::uint64_t end = std::min(total, (s + 1) * kShardSize);
      for (std::uint64_t k = s * kShardSize; k < end; ++k) {
        IntPoly f = family_member(spec, k);
        if (full_cycle_check(f, top)) hits[i].push_back(std::move(f));
        if (hits[i].size() >= limit) break;
      }
    });
    for (auto& h : hits) {
      for (auto& f : h) {
        if (found.size() == limit) break;
        found.push_back(std::move(f));
      }
    }
  }
  return found;
}

bool IdentitySuiteReport::passed() const noexcept {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& r) { return r.violations == 0; });
}

IdentitySuiteReport identity_suite(Prime p, std::uint64_t samples,
                                   std::uint64_t seed) {
  const LevelPolicy policy = LevelPolicy::for_prime(p);
  const bool product_identity = p.value() == 5;

  PropertyResult product{"derivative product identity", 0, 0};
  PropertyResult conjugacy{"conjugacy invariance", 0, 0};
  PropertyResult projection{"projection chain", 0, 0};
  PropertyResult lift{"lift equivalence at 0", 0, 0};
  PropertyResult lift_anywhere{"lift agreement at random x", 0, 0};

  for (std::uint64_t k = 0; k < samples; ++k) {
    // raw[0..8) are a_1..a_8; the rest are candidates for a unit a_0.
    auto raw = sample_coefficients(seed, k, 8 + 16, -100, 100);
    std::int64_t a0 = 1;
    for (std::size_t i = 8; i < raw.size(); ++i) {
      if (raw[i] % static_cast<std::int64_t>(p.value()) != 0) {
        a0 = raw[i];
        break;
      }
    }
    std::vector<BigInt> coeffs{BigInt(a0)};
    for (std::size_t i = 0; i < 8; ++i) coeffs.emplace_back(raw[i]);
    const IntPoly f(coeffs);
    coeffs[0] = 1;
    const IntPoly f1(coeffs);

    // (f^5)'(0) runs over f'(0), ..., f'(4) only when the orbit of 0
    // covers Z/5Z, so the identity is checked under that premise.
    if (product_identity && full_cycle_check(f1, PrimePower(p, Level(1)))) {
      const DerivedTermsP5 t = derived_terms_p5(f1);
      const std::uint64_t rhs =
          reduce(t.a1, 5) * t.D1 * t.D2 * t.Dm2 * t.Dm1 % 5;
      ++product.checked;
      if (chain_rule_product(f1, p) != rhs) ++product.violations;
    }

    ++conjugacy.checked;
    if (oracle_minimal(f, p) != oracle_minimal(normalize(f, p), p)) {
      ++conjugacy.violations;
    }

    for (unsigned n = 2; n <= policy.delta + 1; ++n) {
      const PrimePower level(p, Level(n));
      if (!full_cycle_check(f1, level)) continue;
      ++projection.checked;
      if (!full_cycle_check(f1, level.lower())) ++projection.violations;
    }

    for (unsigned n = 1; n <= policy.delta; ++n) {
      const PrimePower level(p, Level(n));
      if (!full_cycle_check(f1, level)) break;
      const bool at_zero = lift_check(f1, level);
      ++lift.checked;
      if (at_zero != full_cycle_check(f1, level.higher())) ++lift.violations;

      const auto xs = sample_coefficients(seed ^ 0x9e3779b97f4a7c15ull, k * 8 + n,
                                          20, 0,
                                          static_cast<std::int64_t>(
                                              level.higher().modulus()) - 1);
      for (auto x : xs) {
        ++lift_anywhere.checked;
        if (lift_check_at(f1, level, BigInt(x)) != at_zero) {
          ++lift_anywhere.violations;
        }
      }
    }
  }

  IdentitySuiteReport report{p, samples, seed, {}};
  if (product_identity) report.properties.push_back(product);
  report.properties.push_back(conjugacy);
  report.properties.push_back(projection);
  report.properties.push_back(lift);
  report.properties.push_back(lift_anywhere);
  return report;
}

}  // namespace padicmin
