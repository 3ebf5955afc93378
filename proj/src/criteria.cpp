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

#include "padicmin/criteria.hpp"

#include <string>

namespace padicmin {

namespace {

std::int64_t mod_of(const BigInt& x, std::uint64_t m) {
  return static_cast<std::int64_t>(reduce(x, m));
}

void require_normalized(const IntPoly& f) {
  if (f.coeffs().front() != 1) {
    throw NotNormalized("constant term is " + f.coeffs().front().str() +
                        ", expected 1; normalize first");
  }
}

std::string tuple_text(std::initializer_list<std::int64_t> values) {
  std::string s = "(";
  bool first = true;
  for (auto v : values) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + ")";
}

Condition congruence(std::string name, std::string text, std::int64_t residue,
                     std::int64_t modulus, bool passed) {
  return Condition{std::move(name), std::move(text), passed, residue, modulus};
}

bool all_passed(const std::vector<Condition>& cs) {
  for (const auto& c : cs) {
    if (!c.passed) return false;
  }
  return !cs.empty();
}

MinimalityReport closed_form_report(const IntPoly& f, Prime p) {
  MinimalityReport r;
  r.prime = p;
  r.input = f;
  r.normalized = f;
  r.method = Method::ClosedForm;
  return r;
}

}  // namespace

std::string_view to_string(P5Case c) noexcept {
  switch (c) {
    case P5Case::I: return "I";
    case P5Case::II: return "II";
    case P5Case::III: return "III";
    case P5Case::IV: return "IV";
    case P5Case::V: return "V";
    case P5Case::VI: return "VI";
  }
  return "?";
}

std::array<std::uint64_t, 4> case_base(P5Case c) noexcept {
  switch (c) {
    case P5Case::I: return {1, 0, 0, 0};
    case P5Case::II: return {4, 4, 3, 0};
    case P5Case::III: return {1, 3, 3, 0};
    case P5Case::IV: return {1, 4, 2, 0};
    case P5Case::V: return {4, 2, 2, 0};
    case P5Case::VI: return {0, 0, 3, 0};
  }
  return {};
}

std::string_view to_string(Verdict v) noexcept {
  return v == Verdict::Minimal ? "Minimal" : "NotMinimal";
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::ClosedForm: return "closed-form";
    case Method::Oracle: return "oracle";
    case Method::Both: return "both";
  }
  return "?";
}

std::string_view to_string(A0Reading r) noexcept {
  return r == A0Reading::AsA2 ? "A0=A2" : "A0=sum(a_6k)";
}

DerivedTermsP2 derived_terms_p2(const IntPoly& f) {
  require_normalized(f);
  DerivedTermsP2 t{f.coeff(1), f.coeff(2), 0, 0};
  const auto& a = f.coeffs();
  for (std::size_t i = 1; i < a.size(); ++i) {
    (i % 2 == 1 ? t.A1 : t.A2) += a[i];
  }
  return t;
}

DerivedTermsP3 derived_terms_p3(const IntPoly& f) {
  require_normalized(f);
  DerivedTermsP3 t;
  t.a1 = f.coeff(1);
  t.a2 = f.coeff(2);
  const auto& a = f.coeffs();
  for (std::size_t i = 1; i < a.size(); ++i) {
    (i % 2 == 1 ? t.A1 : t.A2) += a[i];
    if (i % 6 == 2) t.S2 += a[i];
    if (i % 6 == 5) t.S5 += a[i];
    if (i % 6 == 0) t.S6 += a[i];
  }
  const IntPoly df = poly_derivative(f);
  t.D1 = df.eval(1);
  t.Dm1 = df.eval(-1);
  return t;
}

DerivedTermsP5 derived_terms_p5(const IntPoly& f) {
  require_normalized(f);
  DerivedTermsP5 t;
  t.a1 = f.coeff(1);
  const auto& a = f.coeffs();
  for (std::size_t i = 1; i < a.size(); ++i) {
    t.A[(i - 1) % 4] += a[i];
  }
  const IntPoly df = poly_derivative(f);
  t.D_exact = {df.eval(1), df.eval(-1), df.eval(2), df.eval(-2)};
  t.D1 = reduce(t.D_exact[0], 5);
  t.Dm1 = reduce(t.D_exact[1], 5);
  t.D2 = reduce(t.D_exact[2], 5);
  t.Dm2 = reduce(t.D_exact[3], 5);

  std::array<std::uint64_t, 4> level1{};
  std::array<std::uint64_t, 4> level2{};
  for (std::size_t r = 0; r < 4; ++r) {
    level1[r] = reduce(t.A[r], 5);
    level2[r] = reduce(t.A[r], 25);
  }
  for (P5Case c : {P5Case::I, P5Case::II, P5Case::III, P5Case::IV, P5Case::V,
                   P5Case::VI}) {
    if (level1 != case_base(c)) continue;
    t.matched = c;
    std::array<std::uint64_t, 4> alpha{};
    const auto base = case_base(c);
    for (std::size_t r = 0; r < 4; ++r) alpha[r] = (level2[r] - base[r]) / 5;
    t.alpha = alpha;
    break;
  }
  return t;
}

DerivedTerms derived_terms(const IntPoly& f, Prime p) {
  switch (p.value()) {
    case 2: return derived_terms_p2(f);
    case 3: return derived_terms_p3(f);
    case 5: return derived_terms_p5(f);
    default:
      throw UnsupportedPrime("no closed-form criterion for p = " +
                             std::to_string(p.value()));
  }
}

MinimalityReport check_p2(const IntPoly& f) {
  const DerivedTermsP2 t = derived_terms_p2(f);
  MinimalityReport r = closed_form_report(f, Prime(2));
  const auto a1 = mod_of(t.a1, 2);
  const auto A1 = mod_of(t.A1, 2);
  const auto sum = mod_of(t.A1 + t.A2, 4);
  const auto mixed = mod_of(2 * t.a2 + t.a1 * t.A1, 4);
  r.conditions.push_back(congruence("a1", "a1 == 1 (mod 2)", a1, 2, a1 == 1));
  r.conditions.push_back(congruence("A1", "A1 == 1 (mod 2)", A1, 2, A1 == 1));
  r.conditions.push_back(
      congruence("A1+A2", "A1 + A2 == 1 (mod 4)", sum, 4, sum == 1));
  r.conditions.push_back(congruence("2a2+a1A1", "2*a2 + a1*A1 == 1 (mod 4)",
                                    mixed, 4, mixed == 1));
  r.verdict = all_passed(r.conditions) ? Verdict::Minimal : Verdict::NotMinimal;
  return r;
}

MinimalityReport check_p3(const IntPoly& f, A0Reading reading) {
  const DerivedTermsP3 t = derived_terms_p3(f);
  MinimalityReport r = closed_form_report(f, Prime(3));
  r.a0_reading = reading;

  struct Row {
    const char* label;
    std::array<std::int64_t, 5> key;  // A1, A2, D1, D-1, a1 mod 3
  };
  static constexpr std::array<Row, 4> kRows{{
      {"I", {1, 0, 2, 2, 1}},
      {"II", {1, 0, 1, 1, 1}},
      {"III", {1, 0, 1, 2, 2}},
      {"IV", {1, 0, 2, 1, 2}},
  }};
  const std::array<std::int64_t, 5> key{mod_of(t.A1, 3), mod_of(t.A2, 3),
                                        mod_of(t.D1, 3), mod_of(t.Dm1, 3),
                                        mod_of(t.a1, 3)};
  const Row* row = nullptr;
  for (const Row& candidate : kRows) {
    if (candidate.key == key) row = &candidate;
  }
  const std::string key_text =
      tuple_text({key[0], key[1], key[2], key[3], key[4]});
  if (row == nullptr) {
    r.conditions.push_back(Condition{
        "row", "(A1,A2,D1,D-1,a1) = " + key_text + " (mod 3) matches no row",
        false, std::nullopt, 3});
    r.verdict = Verdict::NotMinimal;
    return r;
  }
  r.matched_case = row->label;
  r.conditions.push_back(Condition{
      "row", "(A1,A2,D1,D-1,a1) == " + key_text + " (mod 3), row " + row->label,
      true, std::nullopt, 3});

  const std::string label = row->label;
  const BigInt A0 = reading == A0Reading::AsA2 ? t.A2 : t.S6;
  if (label == "I" || label == "III") {
    const int k = label == "I" ? 3 : 6;
    const auto first = mod_of(t.A1 + 5, 9);
    const auto second = mod_of(t.A1 + 5 - k * t.a2 - 3 * t.S5, 9);
    r.conditions.push_back(
        congruence("A1+5", "A1 + 5 != 0 (mod 9)", first, 9, first != 0));
    r.conditions.push_back(congruence(
        "A1+5 vs a2,a_{5+6j}",
        "A1 + 5 != " + std::to_string(k) + "*a2 + 3*sum(a_{5+6j}) (mod 9)",
        second, 9, second != 0));
  } else {
    const int k = label == "II" ? 6 : 3;
    const auto first = mod_of(t.A2 + 6, 9);
    const auto second = mod_of(A0 + 6 - k * t.a2 - 3 * t.S2, 9);
    r.conditions.push_back(
        congruence("A2+6", "A2 + 6 != 0 (mod 9)", first, 9, first != 0));
    r.conditions.push_back(congruence(
        "A0+6 vs a2,a_{2+6j}",
        "A0 + 6 != " + std::to_string(k) + "*a2 + 3*sum(a_{2+6j}) (mod 9), " +
            std::string(to_string(reading)),
        second, 9, second != 0));
  }
  r.verdict = all_passed(r.conditions) ? Verdict::Minimal : Verdict::NotMinimal;
  return r;
}

namespace {

// f^5(0) = 5 * expression (mod 25) for each case with a third condition.
std::uint64_t p5_case_expression(P5Case c, const std::array<std::uint64_t, 4>& al,
                                 const DerivedTermsP5& t) {
  const std::uint64_t a1 = al[0], a2 = al[1], a3 = al[2], a4 = al[3];
  const std::uint64_t dm1 = t.Dm1, d2 = t.D2, dm2 = t.Dm2;
  const std::uint64_t all = a1 + a2 + a3 + a4;
  std::uint64_t e = 0;
  switch (c) {
    case P5Case::I:
      e = (4 * a1 + a2 + 4 * a3 + a4) + (3 * a1 + 4 * a2 + 2 * a3 + a4) * dm1 +
          (1 + 2 * a1 + 4 * a2 + 3 * a3 + a4) * dm1 * dm2 +
          all * dm1 * d2 * dm2;
      break;
    case P5Case::II:
      e = (4 + 3 * a1 + 4 * a2 + 2 * a3 + a4) +
          (4 * a1 + a2 + 4 * a3 + a4) * dm2 +
          (2 * a1 + 4 * a2 + 3 * a3 + a4) * dm1 * dm2 +
          (2 + all) * dm1 * d2 * dm2;
      break;
    case P5Case::III:
      break;
    case P5Case::IV:
      e = (4 + 2 * a1 + 4 * a2 + 3 * a3 + a4) +
          (4 * a1 + a2 + 4 * a3 + a4) * d2 +
          (3 * a1 + 4 * a2 + 2 * a3 + a4) * dm1 * d2 +
          (2 + all) * dm1 * d2 * dm2;
      break;
    case P5Case::V:
      e = (4 + 3 * a1 + 4 * a2 + 2 * a3 + a4) +
          (1 + 2 * a1 + 4 * a2 + 3 * a3 + a4) * dm2 +
          (4 + 4 * a1 + a2 + 4 * a3 + a4) * d2 * dm2 +
          (2 + all) * dm1 * d2 * dm2;
      break;
    case P5Case::VI:
      e = (4 + 2 * a1 + 4 * a2 + 3 * a3 + a4) +
          (1 + 3 * a1 + 4 * a2 + 2 * a3 + a4) * d2 +
          (4 * a1 + a2 + 4 * a3 + a4) * d2 * dm2 +
          (1 + all) * dm1 * d2 * dm2;
      break;
  }
  return e % 5;
}

}  // namespace

MinimalityReport check_p5(const IntPoly& f) {
  const DerivedTermsP5 t = derived_terms_p5(f);
  MinimalityReport r = closed_form_report(f, Prime(5));

  const std::array<std::int64_t, 4> A{mod_of(t.A[0], 5), mod_of(t.A[1], 5),
                                      mod_of(t.A[2], 5), mod_of(t.A[3], 5)};
  if (t.matched) {
    const auto base = case_base(*t.matched);
    r.matched_case = std::string(to_string(*t.matched));
    for (std::size_t i = 0; i < 4; ++i) {
      const std::string name = "A" + std::to_string(i + 1);
      r.conditions.push_back(congruence(
          name, name + " == " + std::to_string(base[i]) + " (mod 5)", A[i], 5,
          true));
    }
  } else {
    r.conditions.push_back(Condition{
        "case", "(A1,A2,A3,A4) = " + tuple_text({A[0], A[1], A[2], A[3]}) +
                    " (mod 5) matches no case",
        false, std::nullopt, 5});
  }

  const auto product = static_cast<std::int64_t>(
      reduce(t.a1, 5) * t.D1 * t.D2 * t.Dm2 * t.Dm1 % 5);
  r.conditions.push_back(congruence("derivative product",
                                    "a1*D1*D2*D-2*D-1 == 1 (mod 5)", product,
                                    5, product == 1));

  if (t.matched && *t.matched == P5Case::III) {
    const auto lifted = static_cast<std::int64_t>(5 * t.Dm1 % 25);
    r.conditions.push_back(congruence(
        "5*D-1", "case III: 5*D-1 != 0 (mod 25), implied by the product",
        lifted, 25, lifted != 0));
  } else if (t.matched) {
    const auto e = static_cast<std::int64_t>(
        p5_case_expression(*t.matched, *t.alpha, t));
    r.conditions.push_back(congruence(
        "f^5(0)/5",
        "case " + std::string(to_string(*t.matched)) +
            " expression in alpha, D != 0 (mod 5)",
        e, 5, e != 0));
  }
  r.verdict = t.matched && all_passed(r.conditions) ? Verdict::Minimal
                                                    : Verdict::NotMinimal;
  return r;
}

Verdict closed_form_verdict(const IntPoly& f, Prime p, A0Reading reading) {
  switch (p.value()) {
    case 2: return check_p2(f).verdict;
    case 3: return check_p3(f, reading).verdict;
    case 5: return check_p5(f).verdict;
    default:
      throw UnsupportedPrime("no closed-form criterion for p = " +
                             std::to_string(p.value()));
  }
}

MinimalityReport check_minimal(const IntPoly& f, Prime p, Method mode,
                               A0Reading reading) {
  const LevelPolicy policy = LevelPolicy::for_prime(p);
  if (mode == Method::ClosedForm && !policy.has_closed_form()) {
    throw UnsupportedPrime("no closed-form criterion for p = " +
                           std::to_string(p.value()));
  }
  std::vector<std::string> notes;
  if (mode == Method::Both && !policy.has_closed_form()) {
    mode = Method::Oracle;
    notes.emplace_back("no closed form for p = " + std::to_string(p.value()) +
                       "; verdict from the level-delta oracle only");
  }
  const bool use_closed = mode != Method::Oracle;
  const bool use_oracle = mode != Method::ClosedForm;

  MinimalityReport r;
  r.prime = p;
  r.input = f;
  r.method = mode;

  const BigInt& a0 = f.coeffs().front();
  std::optional<IntPoly> g;
  if (a0 % p.value() == 0) {
    notes.emplace_back("0 is a fixed point modulo p");
    r.conditions.push_back(congruence("a0 unit",
                                      "a0 != 0 (mod " +
                                          std::to_string(p.value()) + ")",
                                      mod_of(a0, p.value()),
                                      static_cast<std::int64_t>(p.value()),
                                      false));
    if (use_closed) r.closed_form_verdict = Verdict::NotMinimal;
  } else {
    g = normalize(f, p);
    r.normalized = g;
    if (use_closed) {
      MinimalityReport closed;
      switch (p.value()) {
        case 2: closed = check_p2(*g); break;
        case 3: closed = check_p3(*g, reading); break;
        default: closed = check_p5(*g); break;
      }
      r.conditions = std::move(closed.conditions);
      r.matched_case = std::move(closed.matched_case);
      r.a0_reading = closed.a0_reading;
      r.closed_form_verdict = closed.verdict;
      if (p.value() == 5 && g->degree() >= 7) {
        notes.emplace_back(
            "the p = 5 closed form is exact only up to degree 6; degree " +
            std::to_string(g->degree()) + " needs the oracle");
      }
    }
  }

  if (use_oracle) {
    const IntPoly& subject = g ? *g : f;
    r.witness = orbit(subject, Residue(0, policy.modulus()));
    r.oracle_verdict =
        r.witness->is_full_cycle() ? Verdict::Minimal : Verdict::NotMinimal;
  }

  if (r.oracle_verdict) {
    r.verdict = *r.oracle_verdict;
    if (r.closed_form_verdict && *r.closed_form_verdict != *r.oracle_verdict) {
      r.criterion_mismatch = true;
      notes.push_back("CriterionMismatch: closed form says " +
                      std::string(to_string(*r.closed_form_verdict)) +
                      ", oracle says " +
                      std::string(to_string(*r.oracle_verdict)));
    }
  } else {
    r.verdict = *r.closed_form_verdict;
  }
  r.notes = std::move(notes);
  return r;
}

std::uint64_t chain_rule_product(const IntPoly& f, Prime p) {
  const std::uint64_t q = p.value();
  ReducedPoly g(f, q);
  ReducedPoly dg(poly_derivative(f), q);
  std::uint64_t x = 0;
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < q; ++i) {
    acc = acc * dg(x) % q;
    x = g(x);
  }
  return acc;
}

}  // namespace padicmin
