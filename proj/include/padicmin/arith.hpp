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

#ifndef PADICMIN_ARITH_HPP
#define PADICMIN_ARITH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "padicmin/errors.hpp"

namespace padicmin {

using BigInt = boost::multiprecision::cpp_int;

/// A prime number, checked by trial division on construction.
class Prime {
public:
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }
  friend bool operator==(Prime, Prime) = default;

private:
  std::uint64_t value_;
};

/// Exponent n of a modulus p^n; always at least 1.
class Level {
public:
  explicit Level(unsigned n);

  unsigned value() const noexcept { return n_; }
  friend bool operator==(Level, Level) = default;

private:
  unsigned n_;
};

/// The modulus p^n of the finite quotient Z/p^nZ.
///
/// p^n is limited to 2^32 so that products of two residues fit in 64 bits.
class PrimePower {
public:
  PrimePower(Prime p, Level n);

  Prime prime() const noexcept { return p_; }
  Level level() const noexcept { return n_; }
  std::uint64_t modulus() const noexcept { return m_; }

  /// The same prime one level down or up the projection tower.
  PrimePower lower() const;
  PrimePower higher() const;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

private:
  Prime p_;
  Level n_;
  std::uint64_t m_;
};

/// Canonical reduction of an exact integer into [0, m).
std::uint64_t reduce(const BigInt& x, std::uint64_t m);

/// An element of Z/p^nZ in canonical form.
class Residue {
public:
  Residue(std::uint64_t value, PrimePower modulus);
  static Residue from_integer(const BigInt& x, PrimePower modulus);

  std::uint64_t value() const noexcept { return value_; }
  const PrimePower& modulus() const noexcept { return modulus_; }

  /// Image under the canonical projection to level n-1.
  Residue project() const;

  friend bool operator==(const Residue&, const Residue&) = default;

private:
  std::uint64_t value_;
  PrimePower modulus_;
};

/// Polynomial a_0 + a_1 x + ... + a_d x^d with exact integer coefficients.
///
/// Never empty; the leading coefficient is nonzero unless the degree is 0.
class IntPoly {
public:
  IntPoly();  // the zero polynomial
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  /// a_i, or zero past the degree.
  BigInt coeff(std::size_t i) const;

  /// Exact value at an integer point.
  BigInt eval(const BigInt& x) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  friend auto operator<=>(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

private:
  std::vector<BigInt> coeffs_;
};

/// Coefficients of an IntPoly reduced once into [0, m), for fast repeated
/// evaluation on Z/mZ.
class ReducedPoly {
public:
  ReducedPoly(const IntPoly& f, std::uint64_t m);

  std::uint64_t modulus() const noexcept { return m_; }
  std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }

  /// Horner evaluation with reduction after every step; x must be < m.
  std::uint64_t operator()(std::uint64_t x) const noexcept {
    std::uint64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = (acc * x + *it) % m_;
    }
    return acc;
  }

private:
  std::vector<std::uint64_t> coeffs_;
  std::uint64_t m_;
};

/// nu_p(x); std::nullopt stands for infinity (x = 0).
std::optional<unsigned> padic_valuation(const BigInt& x, Prime p);

/// r with a*r = 1 (mod p^n). Throws NotAUnit when p | a.
Residue mod_inverse(const BigInt& a, Prime p, Level n);

Residue poly_eval_mod(const IntPoly& f, const Residue& x);
IntPoly poly_derivative(const IntPoly& f);

/// f(g(x)) with coefficients reduced into [0, p^n).
IntPoly poly_compose_mod(const IntPoly& f, const IntPoly& g, Prime p, Level n);

/// Coefficients reduced into [0, p^n), trailing zeros trimmed.
IntPoly poly_reduce_mod(const IntPoly& f, PrimePower modulus);

/// Conjugate f to g(x) = f(a_0 x) / a_0, so that g(0) = 1.
///
/// g_i = a_i * a_0^(i-1) exactly. Throws ConstantTermNotUnit when p | a_0.
IntPoly normalize(const IntPoly& f, Prime p);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace padicmin

#endif  // PADICMIN_ARITH_HPP
