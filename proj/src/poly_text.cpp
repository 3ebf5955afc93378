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

#include "padicmin/poly_text.hpp"

#include <cctype>
#include <regex>
#include <vector>

namespace padicmin {

namespace {

constexpr std::size_t kMaxExponent = 1 << 16;

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

class Cursor {
public:
  explicit Cursor(std::string_view s) : s_(s) {}

  bool done() const { return pos_ == s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string_view digits() {
    const std::size_t begin = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(begin, pos_ - begin);
  }
  std::size_t pos() const { return pos_; }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw ParseError("cannot parse polynomial \"" + std::string(text) + "\": " + why);
}

IntPoly parse_coeff_list(std::string_view original, const std::string& s) {
  std::vector<BigInt> coeffs;
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = s.find(',', begin);
    const std::string_view item =
        std::string_view(s).substr(begin, comma == std::string::npos
                                              ? std::string::npos
                                              : comma - begin);
    Cursor cur(item);
    const bool negative = cur.accept('-');
    if (!negative) cur.accept('+');
    const std::string_view d = cur.digits();
    if (d.empty() || !cur.done()) {
      fail(original, "bad coefficient \"" + std::string(item) + "\"");
    }
    BigInt c{std::string(d)};
    coeffs.push_back(negative ? BigInt(-c) : c);
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return IntPoly(std::move(coeffs));
}

IntPoly parse_expression(std::string_view original, const std::string& s) {
  std::vector<BigInt> coeffs(1);
  Cursor cur(s);
  bool first = true;
  while (!cur.done()) {
    bool negative = false;
    if (cur.accept('-')) {
      negative = true;
    } else if (!cur.accept('+') && !first) {
      fail(original, "expected + or - at offset " + std::to_string(cur.pos()));
    }
    first = false;

    const std::string_view d = cur.digits();
    BigInt c = d.empty() ? BigInt(1) : BigInt(std::string(d));
    std::size_t power = 0;
    if (!d.empty() && cur.peek() == '*') {
      cur.accept('*');
      if (cur.peek() != 'x' && cur.peek() != 'X') fail(original, "dangling '*'");
    }
    if (cur.accept('x') || cur.accept('X')) {
      power = 1;
      if (cur.accept('^')) {
        const std::string_view e = cur.digits();
        if (e.empty()) fail(original, "missing exponent after '^'");
        if (e.size() > 6 || std::stoul(std::string(e)) > kMaxExponent) {
          fail(original, "exponent too large");
        }
        power = std::stoul(std::string(e));
      }
    } else if (d.empty()) {
      fail(original, "empty term at offset " + std::to_string(cur.pos()));
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += negative ? BigInt(-c) : c;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly parse_poly(std::string_view text) {
  static const std::regex kSplitNumber(R"(\d\s+\d)");
  if (std::regex_search(text.begin(), text.end(), kSplitNumber)) {
    fail(text, "whitespace inside a number");
  }
  const std::string s = strip_spaces(text);
  if (s.empty()) fail(text, "empty input");
  if (s.find_first_of("xX") != std::string::npos) {
    return parse_expression(text, s);
  }
  return parse_coeff_list(text, s);
}

std::string format_poly(const IntPoly& f) {
  std::string out;
  const auto& a = f.coeffs();
  for (std::size_t i = a.size(); i-- > 0;) {
    const BigInt& c = a[i];
    if (c == 0 && !(i == 0 && out.empty())) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

std::string format_coeff_list(const IntPoly& f) {
  std::string out;
  for (const BigInt& c : f.coeffs()) {
    if (!out.empty()) out += ',';
    out += c.str();
  }
  return out;
}

}  // namespace padicmin
