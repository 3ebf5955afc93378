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

#include "padicmin/dynamics.hpp"

#include <algorithm>
#include <limits>

namespace padicmin {

namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

}  // namespace

LevelPolicy LevelPolicy::for_prime(Prime p) noexcept {
  return LevelPolicy{p, p.value() <= 3 ? 3u : 2u};
}

bool LevelPolicy::has_closed_form() const noexcept {
  const auto v = p.value();
  return v == 2 || v == 3 || v == 5;
}

OrbitTrace orbit(const IntPoly& f, const Residue& start) {
  const std::uint64_t m = start.modulus().modulus();
  ReducedPoly g(f, m);

  // first_seen[x] = index of x in the sequence.
  std::vector<std::uint32_t> first_seen(m, kUnseen);
  OrbitTrace trace{start, {}, 0, 0};
  std::uint64_t x = start.value();
  while (first_seen[x] == kUnseen) {
    first_seen[x] = static_cast<std::uint32_t>(trace.sequence.size());
    trace.sequence.push_back(x);
    x = g(x);
  }
  trace.preperiod = first_seen[x];
  trace.period = trace.sequence.size() - trace.preperiod;
  return trace;
}

bool full_cycle_check(const IntPoly& f, PrimePower level) {
  const std::uint64_t m = level.modulus();
  ReducedPoly g(f, m);
  // The first return time of 0 is m exactly when the orbit of 0 covers
  // every residue.
  std::uint64_t x = 0;
  for (std::uint64_t i = 1; i < m; ++i) {
    x = g(x);
    if (x == 0) return false;
  }
  return g(x) == 0;
}

CycleDecomposition minimal_decomposition(const IntPoly& f, PrimePower level) {
  const std::uint64_t m = level.modulus();
  ReducedPoly g(f, m);
  std::vector<std::uint64_t> next(m);
  for (std::uint64_t x = 0; x < m; ++x) next[x] = g(x);

  // owner[x]: component index once assigned; walk_id[x]: the walk that
  // reached x while its component was still unknown.
  std::vector<std::uint32_t> owner(m, kUnseen);
  std::vector<std::uint32_t> walk_id(m, kUnseen);
  std::vector<Component> components;
  std::vector<std::uint64_t> path;

  for (std::uint64_t s = 0; s < m; ++s) {
    if (owner[s] != kUnseen) continue;
    const auto walk = static_cast<std::uint32_t>(s);
    path.clear();
    std::uint64_t x = s;
    while (owner[x] == kUnseen && walk_id[x] != walk) {
      walk_id[x] = walk;
      path.push_back(x);
      x = next[x];
    }

    std::uint32_t comp;
    std::size_t tail_end = path.size();
    if (owner[x] != kUnseen) {
      comp = owner[x];
    } else {
      // x closes a new cycle inside this walk.
      comp = static_cast<std::uint32_t>(components.size());
      Component c;
      tail_end = static_cast<std::size_t>(
          std::find(path.begin(), path.end(), x) - path.begin());
      c.cycle.assign(path.begin() + static_cast<std::ptrdiff_t>(tail_end),
                     path.end());
      std::rotate(c.cycle.begin(),
                  std::min_element(c.cycle.begin(), c.cycle.end()),
                  c.cycle.end());
      for (std::uint64_t y : c.cycle) owner[y] = comp;
      components.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < tail_end; ++i) {
      owner[path[i]] = comp;
      components[comp].tails.push_back(path[i]);
    }
  }

  for (Component& c : components) std::sort(c.tails.begin(), c.tails.end());
  std::sort(components.begin(), components.end(),
            [](const Component& a, const Component& b) {
              return a.cycle.front() < b.cycle.front();
            });
  return CycleDecomposition{level, std::move(components)};
}

bool oracle_minimal(const IntPoly& f, Prime p) {
  return full_cycle_check(f, LevelPolicy::for_prime(p).modulus());
}

bool lift_check_at(const IntPoly& f, PrimePower level, const BigInt& x) {
  if (!full_cycle_check(f, level)) {
    throw PreconditionViolated("f is not a full cycle modulo " +
                               std::to_string(level.modulus()));
  }
  const PrimePower up = level.higher();
  const std::uint64_t p = level.prime().value();
  ReducedPoly g(f, up.modulus());
  ReducedPoly dg(poly_derivative(f), p);

  const std::uint64_t x0 = reduce(x, up.modulus());
  std::uint64_t y = x0;
  std::uint64_t slope = 1;
  for (std::uint64_t i = 0; i < level.modulus(); ++i) {
    slope = slope * dg(y % p) % p;
    y = g(y);
  }
  return y != x0 && slope == 1;
}

bool lift_check(const IntPoly& f, PrimePower level) {
  return lift_check_at(f, level, BigInt(0));
}

}  // namespace padicmin
