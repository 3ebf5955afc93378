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

#include "padicmin/arith.hpp"

#include <limits>
#include <string>

#include <boost/integer/mod_inverse.hpp>

namespace padicmin {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

void trim(std::vector<BigInt>& coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0) {
    coeffs.pop_back();
  }
  if (coeffs.empty()) {
    coeffs.emplace_back(0);
  }
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (!is_prime(value)) {
    throw InvalidArgument(std::to_string(value) + " is not prime");
  }
}

Level::Level(unsigned n) : n_(n) {
  if (n == 0) {
    throw InvalidArgument("level must be at least 1");
  }
}

PrimePower::PrimePower(Prime p, Level n) : p_(p), n_(n), m_(1) {
  for (unsigned i = 0; i < n.value(); ++i) {
    if (m_ > kMaxModulus / p.value()) {
      throw InvalidArgument(std::to_string(p.value()) + "^" +
                            std::to_string(n.value()) + " exceeds 2^32");
    }
    m_ *= p.value();
  }
}

PrimePower PrimePower::lower() const {
  return PrimePower(p_, Level(n_.value() - 1));
}

PrimePower PrimePower::higher() const {
  return PrimePower(p_, Level(n_.value() + 1));
}

std::uint64_t reduce(const BigInt& x, std::uint64_t m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

Residue::Residue(std::uint64_t value, PrimePower modulus)
    : value_(value), modulus_(modulus) {
  if (value >= modulus.modulus()) {
    throw InvalidArgument(std::to_string(value) + " is not in [0, " +
                          std::to_string(modulus.modulus()) + ")");
  }
}

Residue Residue::from_integer(const BigInt& x, PrimePower modulus) {
  return Residue(reduce(x, modulus.modulus()), modulus);
}

Residue Residue::project() const {
  PrimePower down = modulus_.lower();
  return Residue(value_ % down.modulus(), down);
}

IntPoly::IntPoly() : coeffs_{BigInt(0)} {}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim(coeffs_);
}

BigInt IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

ReducedPoly::ReducedPoly(const IntPoly& f, std::uint64_t m) : m_(m) {
  coeffs_.reserve(f.coeffs().size());
  for (const BigInt& c : f.coeffs()) coeffs_.push_back(reduce(c, m));
}

std::optional<unsigned> padic_valuation(const BigInt& x, Prime p) {
  if (x == 0) return std::nullopt;
  BigInt y = x;
  unsigned v = 0;
  while (y % p.value() == 0) {
    y /= p.value();
    ++v;
  }
  return v;
}

Residue mod_inverse(const BigInt& a, Prime p, Level n) {
  PrimePower pn(p, n);
  if (a % p.value() == 0) {
    throw NotAUnit(a.str() + " is divisible by " + std::to_string(p.value()));
  }
  const auto m = static_cast<long long>(pn.modulus());
  const auto r = static_cast<long long>(reduce(a, pn.modulus()));
  if (m == 1) return Residue(0, pn);
  return Residue(static_cast<std::uint64_t>(boost::integer::mod_inverse(r, m)),
                 pn);
}

Residue poly_eval_mod(const IntPoly& f, const Residue& x) {
  ReducedPoly g(f, x.modulus().modulus());
  return Residue(g(x.value()), x.modulus());
}

IntPoly poly_derivative(const IntPoly& f) {
  const auto& a = f.coeffs();
  if (a.size() == 1) return IntPoly();
  std::vector<BigInt> out;
  out.reserve(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    out.push_back(a[i] * static_cast<unsigned long long>(i));
  }
  return IntPoly(std::move(out));
}

IntPoly poly_reduce_mod(const IntPoly& f, PrimePower modulus) {
  std::vector<BigInt> out;
  out.reserve(f.coeffs().size());
  for (const BigInt& c : f.coeffs()) out.emplace_back(reduce(c, modulus.modulus()));
  return IntPoly(std::move(out));
}

IntPoly poly_compose_mod(const IntPoly& f, const IntPoly& g, Prime p, Level n) {
  PrimePower pn(p, n);
  const std::uint64_t m = pn.modulus();
  ReducedPoly gr(g, m);
  ReducedPoly fr(f, m);
  auto inner = gr.coeffs();

  // Horner in the polynomial ring (Z/mZ)[x]: acc <- acc * g + a_i.
  std::vector<std::uint64_t> acc{0};
  for (auto it = fr.coeffs().rbegin(); it != fr.coeffs().rend(); ++it) {
    std::vector<std::uint64_t> next(acc.size() + inner.size() - 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] == 0) continue;
      for (std::size_t j = 0; j < inner.size(); ++j) {
        next[i + j] = (next[i + j] + acc[i] * inner[j]) % m;
      }
    }
    next[0] = (next[0] + *it) % m;
    acc = std::move(next);
  }

  std::vector<BigInt> out(acc.begin(), acc.end());
  return IntPoly(std::move(out));
}

IntPoly normalize(const IntPoly& f, Prime p) {
  const BigInt& a0 = f.coeffs().front();
  if (a0 % p.value() == 0) {
    throw ConstantTermNotUnit("constant term " + a0.str() +
                              " is divisible by " + std::to_string(p.value()) +
                              "; 0 is a fixed point modulo p");
  }
  std::vector<BigInt> g;
  g.reserve(f.coeffs().size());
  g.emplace_back(1);
  BigInt scale = 1;  // a_0^(i-1)
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    g.push_back(f.coeffs()[i] * scale);
    scale *= a0;
  }
  return IntPoly(std::move(g));
}

}  // namespace padicmin
