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

#ifndef PADICMIN_DYNAMICS_HPP
#define PADICMIN_DYNAMICS_HPP

#include <cstdint>
#include <vector>

#include "padicmin/arith.hpp"

namespace padicmin {

/// Iterates start, f(start), f^2(start), ... up to (not including) the
/// first repeated point. sequence[preperiod] is where the cycle begins.
struct OrbitTrace {
  Residue start;
  std::vector<std::uint64_t> sequence;
  std::uint64_t preperiod = 0;
  std::uint64_t period = 0;

  bool is_full_cycle() const noexcept {
    return preperiod == 0 && period == start.modulus().modulus();
  }
};

/// One grand orbit of f on Z/p^nZ: its unique cycle (starting at the
/// cycle's smallest element) and every point that falls into it.
struct Component {
  std::vector<std::uint64_t> cycle;
  std::vector<std::uint64_t> tails;  // ascending

  std::size_t size() const noexcept { return cycle.size() + tails.size(); }
};

/// Partition of Z/p^nZ into components, ordered by smallest cycle element.
struct CycleDecomposition {
  PrimePower level;
  std::vector<Component> components;
};

/// The level delta at which minimality on Z_p is decided: 3 for p = 2, 3
/// and 2 for every larger prime.
struct LevelPolicy {
  Prime p;
  unsigned delta;

  static LevelPolicy for_prime(Prime p) noexcept;

  /// Closed-form criteria exist only for 2, 3 and 5; larger primes rely on
  /// the level reduction alone.
  bool has_closed_form() const noexcept;

  PrimePower modulus() const { return PrimePower(p, Level(delta)); }
};

OrbitTrace orbit(const IntPoly& f, const Residue& start);

/// True iff f acts on Z/p^nZ as one cycle of length p^n.
bool full_cycle_check(const IntPoly& f, PrimePower level);

CycleDecomposition minimal_decomposition(const IntPoly& f, PrimePower level);

/// Brute-force minimality of f on Z_p: a full cycle on Z/p^delta Z.
bool oracle_minimal(const IntPoly& f, Prime p);

/// Lifting test from level n to n+1 evaluated at x: f^{p^n}(x) - x is
/// nonzero mod p^{n+1} and (f^{p^n})'(x) = 1 (mod p). The derivative is the
/// chain-rule product over the orbit of x.
///
/// Throws PreconditionViolated if f is not a full cycle at level n.
bool lift_check_at(const IntPoly& f, PrimePower level, const BigInt& x);

/// lift_check_at with x = 0.
bool lift_check(const IntPoly& f, PrimePower level);

}  // namespace padicmin

#endif  // PADICMIN_DYNAMICS_HPP
