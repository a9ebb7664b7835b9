#include "psum/checks.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

#include "psum/alternating.hpp"
#include "psum/errors.hpp"
#include "psum/faulhaber.hpp"
#include "psum/polynomial.hpp"
#include "psum/rfold.hpp"
#include "psum/series.hpp"
#include "psum/special_sequences.hpp"

namespace psum {

std::vector<Rational> akiyama_tanigawa(std::size_t max_index) {
  std::vector<Rational> out;
  std::vector<Rational> a(max_index + 1);
  for (std::size_t m = 0; m <= max_index; ++m) {
    a[m] = Rational(1, static_cast<long>(m + 1));
    for (std::size_t j = m; j >= 1; --j) a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  // The algorithm produces B_1 = +1/2.
  if (max_index >= 1) out[1] = -out[1];
  return out;
}

namespace {

const Poly kX = Poly::identity("x");

std::string str(const Rational& r) { return r.to_string(); }

Json xs_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(str(x));
  return out;
}

const BernoulliTable& table_for(const SuiteConfig& config) {
  static const BernoulliTable faulty = BernoulliTable::with_sign_fault(2);
  return config.sign_fault ? faulty : bernoulli_table();
}

CheckResult start(std::string name, Json params) {
  CheckResult r;
  r.name = std::move(name);
  r.params = std::move(params);
  return r;
}

CheckResult fail(CheckResult r, Json witness) {
  r.pass = false;
  r.counterexample = std::move(witness);
  return r;
}

Rational sign_pow(std::size_t n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  return Rational(num(rng), den(rng));
}

Poly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> cs(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& c : cs) c = random_rational(rng);
  return Poly("x", std::move(cs));
}

// ---- exact algebra ----

CheckResult field_axioms(const SuiteConfig& c) {
  auto r = start("exact_algebra.field_axioms", {{"seed", c.seed}, {"samples", 200}});
  std::mt19937_64 rng(c.seed);
  for (int s = 0; s < 200; ++s) {
    const Rational a = random_rational(rng), b = random_rational(rng), d = random_rational(rng);
    const bool ok = (a + b) + d == a + (b + d) && a * (b + d) == a * b + a * d && a * b == b * a &&
                    a - a == Rational(0) && (a.is_zero() || a * (Rational(1) / a) == Rational(1)) &&
                    Rational::parse(a.to_string()) == a;
    if (!ok) return fail(r, {{"a", str(a)}, {"b", str(b)}, {"c", str(d)}});
  }
  return r;
}

CheckResult ring_axioms(const SuiteConfig& c) {
  auto r = start("exact_algebra.ring_axioms", {{"seed", c.seed}, {"samples", 100}, {"max_degree", 5}});
  std::mt19937_64 rng(c.seed ^ 0x5eedULL);
  for (int s = 0; s < 100; ++s) {
    const Poly p = random_poly(rng, 5), q = random_poly(rng, 5), u = random_poly(rng, 3);
    const bool ok = (p * q) * u == p * (q * u) && p * (q + u) == p * q + p * u && p * q == q * p &&
                    p - p == Poly("x") && compose(compose(p, q), u) == compose(p, compose(q, u));
    if (!ok) return fail(r, {{"p", render(p, Format::kText)}, {"q", render(q, Format::kText)}, {"u", render(u, Format::kText)}});
  }
  return r;
}

CheckResult interpolation_round_trip(const SuiteConfig& c) {
  auto r = start("exact_algebra.interpolation_round_trip", {{"seed", c.seed}, {"samples", 50}, {"max_degree", 8}});
  std::mt19937_64 rng(c.seed ^ 0x1a7eULL);
  for (int s = 0; s < 50; ++s) {
    const Poly p = random_poly(rng, 8);
    std::vector<std::pair<Rational, Rational>> pts;
    for (int i = 0; i <= std::max(p.degree(), 0); ++i) {
      const Rational x = Rational(3 * i - 7, 2);
      pts.emplace_back(x, p(x));
    }
    if (interpolate(pts, "x") != p) return fail(r, {{"p", render(p, Format::kText)}});
  }
  return r;
}

CheckResult json_round_trip(const SuiteConfig& c) {
  auto r = start("exact_algebra.json_round_trip", {{"seed", c.seed}, {"samples", 50}});
  std::mt19937_64 rng(c.seed ^ 0x150eULL);
  for (int s = 0; s < 50; ++s) {
    const Poly p = random_poly(rng, 6);
    const BiPoly b = BiPoly("n", {p, Poly::constant(random_rational(rng)), random_poly(rng, 3)});
    if (poly_from_json(Json::parse(to_json(p).dump())) != p || bipoly_from_json(Json::parse(to_json(b).dump())) != b) {
      return fail(r, {{"p", render(p, Format::kText)}});
    }
  }
  return r;
}

CheckResult falling_factorial_step(const SuiteConfig&) {
  auto r = start("exact_algebra.falling_factorial", {{"l", "0..20"}, {"binomial_at", "0..15"}});
  for (unsigned l = 0; l <= 20; ++l) {
    if (falling_factorial(kX, l + 1) != falling_factorial(kX, l) * (kX - Rational(static_cast<long>(l)))) {
      return fail(r, {{"l", l}});
    }
    const Poly b = binomial_poly(kX, l);
    for (long n = 0; n <= 15; ++n) {
      if (b(Rational(n)) != Rational(binomial(n, l))) return fail(r, {{"k", l}, {"n", n}});
    }
  }
  return r;
}

// ---- special sequences ----

CheckResult bernoulli_numbers_oracle(const SuiteConfig& c) {
  const std::size_t max = std::max<std::size_t>(20, 2 * c.max_m + 2);
  auto r = start("bernoulli.numbers_oracle", {{"max_index", max}});
  const auto oracle = akiyama_tanigawa(max);
  const auto& t = table_for(c);
  for (std::size_t n = 0; n <= max; ++n) {
    if (t.number(n) != oracle[n]) return fail(r, {{"n", n}, {"expected", str(oracle[n])}, {"got", str(t.number(n))}});
  }
  return r;
}

CheckResult bernoulli_translation(const SuiteConfig& c) {
  auto r = start("bernoulli.translation", {{"n", "1..20"}});
  for (std::size_t n = 1; n <= 20; ++n) {
    const Poly b = table_for(c).poly(n);
    if (compose(b, kX + Rational(1)) - b != Poly::monomial("x", Rational(static_cast<long>(n)), n - 1)) return fail(r, {{"n", n}});
  }
  return r;
}

CheckResult bernoulli_reflection(const SuiteConfig& c) {
  auto r = start("bernoulli.reflection", {{"n", "0..20"}});
  for (std::size_t n = 0; n <= 20; ++n) {
    const Poly b = table_for(c).poly(n);
    if (compose(b, Poly("x", {1, -1})) != b * sign_pow(n)) return fail(r, {{"n", n}});
  }
  return r;
}

CheckResult bernoulli_derivative(const SuiteConfig& c) {
  auto r = start("bernoulli.derivative", {{"n", "1..20"}});
  for (std::size_t n = 1; n <= 20; ++n) {
    if (table_for(c).poly(n).derivative() != table_for(c).poly(n - 1) * Rational(static_cast<long>(n))) {
      return fail(r, {{"n", n}});
    }
  }
  return r;
}

CheckResult bernoulli_addition(const SuiteConfig& c) {
  auto r = start("bernoulli.addition", {{"n", "0..12"}});
  const BiPoly shift = BiPoly::identity("y") + kX;
  for (std::size_t n = 0; n <= 12; ++n) {
    BiPoly rhs("y");
    for (std::size_t i = 0; i <= n; ++i) {
      rhs += BiPoly::monomial("y", table_for(c).poly(i) * Rational(binomial(static_cast<long>(n), static_cast<long>(i))), n - i);
    }
    if (compose(table_for(c).poly(n), shift) != rhs) return fail(r, {{"n", n}});
  }
  return r;
}

CheckResult bernoulli_half_values(const SuiteConfig& c) {
  auto r = start("bernoulli.half_values", {{"n", "0..10"}});
  const Rational half(1, 2);
  for (long n = 0; n <= 10; ++n) {
    const auto& t = table_for(c);
    const auto k = static_cast<std::size_t>(n);
    if (!t.poly(2 * k + 1)(half).is_zero()) return fail(r, {{"index", 2 * n + 1}});
    const Rational expected = (pow(Rational(2), 1 - 2 * n) - Rational(1)) * t.number(2 * k);
    const Rational got = t.poly(2 * k)(half);
    if (got != expected) return fail(r, {{"index", 2 * n}, {"expected", str(expected)}, {"got", str(got)}});
  }
  return r;
}

CheckResult euler_addition(const SuiteConfig&) {
  auto r = start("euler.addition", {{"n", "0..12"}});
  const BiPoly shift = BiPoly::identity("y") + kX;
  for (std::size_t n = 0; n <= 12; ++n) {
    BiPoly rhs("y");
    for (std::size_t k = 0; k <= n; ++k) {
      rhs += BiPoly::monomial("y", euler_poly(k) * Rational(binomial(static_cast<long>(n), static_cast<long>(k))), n - k);
    }
    if (compose(euler_poly(n), shift) != rhs) return fail(r, {{"n", n}});
  }
  return r;
}

CheckResult euler_numbers_half_values(const SuiteConfig&) {
  auto r = start("euler.numbers_half_values", {{"n", "0..24"}});
  for (std::size_t n = 0; n <= 24; ++n) {
    const Rational e = euler_table().number(n);
    if (n % 2 == 1 && !e.is_zero()) return fail(r, {{"n", n}, {"got", str(e)}});
    if (e != pow(Rational(2), static_cast<long>(n)) * euler_poly(n)(Rational(1, 2))) return fail(r, {{"n", n}});
  }
  return r;
}

CheckResult euler_shift_relation(const SuiteConfig&) {
  auto r = start("euler.shift_relation", {{"n", "0..24"}});
  for (std::size_t n = 0; n <= 24; ++n) {
    const Poly e = euler_poly(n);
    if (compose(e, kX + Rational(1)) + e != Poly::monomial("x", Rational(2), n)) return fail(r, {{"n", n}});
    if (n >= 2 && n % 2 == 0 && !e(Rational(1)).is_zero()) return fail(r, {{"n", n}, {"at", "1"}});
  }
  return r;
}

CheckResult central_factorial_expansion(const SuiteConfig& c) {
  const unsigned max = std::max(14u, 2 * c.max_m);
  auto r = start("central_factorial.expansion", {{"m", "1.." + std::to_string(max)}});
  for (unsigned m = 1; m <= max; ++m) {
    const auto row = central_factorial_numbers(m);
    Poly sum("x");
    for (unsigned k = 1; k <= m; ++k) {
      if ((m - k) % 2 == 1 && !row[k - 1].is_zero()) return fail(r, {{"m", m}, {"k", k}});
      sum += central_factorial_poly(k) * row[k - 1];
    }
    if (sum != Poly::monomial("x", Rational(1), m)) return fail(r, {{"m", m}});
  }
  return r;
}

// ---- faulhaber ----

Json grid_params(const SuiteConfig& c, const std::string& m_range) {
  return Json{{"m", m_range}, {"x", xs_json(c.xs)}, {"n", "1.." + std::to_string(c.max_n)}};
}

CheckResult faulhaber_odd_oracle(const SuiteConfig& c) {
  auto r = start("faulhaber.odd_power_oracle", grid_params(c, "1.." + std::to_string(c.max_m)));
  for (unsigned m = 1; m <= c.max_m; ++m) {
    const LambdaExpansion e = faulhaber_coeffs(m, table_for(c));
    for (const auto& x : c.xs) {
      Rational direct;
      for (long n = 1; n <= c.max_n; ++n) {
        direct += pow(x + Rational(n), 2 * static_cast<long>(m) - 1);
        const Rational got = e.evaluate(x, n);
        if (got != direct) return fail(r, {{"m", m}, {"x", str(x)}, {"n", n}, {"expected", str(direct)}, {"got", str(got)}});
      }
    }
  }
  return r;
}

CheckResult faulhaber_bernoulli_difference(const SuiteConfig& c) {
  auto r = start("faulhaber.bernoulli_difference", {{"m", "1.." + std::to_string(c.max_m)}});
  for (unsigned m = 1; m <= c.max_m; ++m) {
    if (faulhaber_coeffs(m, table_for(c)).substituted() != direct_power_sum_poly(2 * m - 1)) return fail(r, {{"m", m}});
  }
  return r;
}

CheckResult gessel_viennot(const SuiteConfig& c) {
  const unsigned max = std::max(c.max_m, 12u);
  auto r = start("faulhaber.gessel_viennot", {{"m", "1.." + std::to_string(max)}, {"mapping", "lambda^{m-k} <- A_k/(2m)"}});
  for (unsigned m = 1; m <= max; ++m) {
    const auto a = gessel_viennot_coeffs(m, table_for(c));
    const auto f = faulhaber_coeffs(m, table_for(c));
    for (unsigned k = 0; k < m; ++k) {
      const Rational expected = f.coeffs[m - k](Rational(0));
      const Rational got = a[k] / Rational(2 * static_cast<long>(m));
      if (got != expected) return fail(r, {{"m", m}, {"k", k}, {"expected", str(expected)}, {"got", str(got)}});
    }
  }
  return r;
}

CheckResult alternating_oracle(const SuiteConfig& c) {
  auto r = start("faulhaber.alternating_oracle", grid_params(c, "1.." + std::to_string(c.max_m)));
  for (unsigned m = 1; m <= c.max_m; ++m) {
    const LambdaExpansion e = alternating_coeffs(m);
    for (const auto& x : c.xs) {
      for (long n = 1; n <= c.max_n; ++n) {
        const Rational expected = alternating_power_sum_direct(2 * m, x, n);
        const Rational got = e.evaluate(x, n);
        if (got != expected) return fail(r, {{"m", m}, {"x", str(x)}, {"n", n}, {"expected", str(expected)}, {"got", str(got)}});
      }
    }
  }
  return r;
}

CheckResult progression_oracle(const SuiteConfig& c) {
  auto r = start("faulhaber.progression_oracle", {{"seed", c.seed}, {"samples", 6}, {"m", "1.." + std::to_string(c.max_m)}, {"n", "1.." + std::to_string(c.max_n)}});
  std::mt19937_64 rng(c.seed ^ 0x9a09ULL);
  for (int s = 0; s < 6; ++s) {
    const Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    if (b.is_zero()) b = Rational(1, 3);
    const ProgressionSpec spec{a, b};
    const Poly mu = progression_mu(spec);
    for (unsigned m = 1; m <= c.max_m; ++m) {
      const Poly in_mu = progression_power_sum(spec, m);
      Rational direct;
      for (long n = 1; n <= c.max_n; ++n) {
        direct += pow(a + Rational(n) * b, 2 * static_cast<long>(m) - 1);
        if (in_mu(mu(Rational(n))) != direct) return fail(r, {{"a", str(a)}, {"b", str(b)}, {"m", m}, {"n", n}});
      }
    }
  }
  return r;
}

CheckResult lambda_decomposition(const SuiteConfig& c) {
  auto r = start("faulhaber.lambda_decomposition", Json{{"i", "1.." + std::to_string(c.max_m)}, {"x", xs_json(c.xs)}, {"n", "1.." + std::to_string(c.max_n)}});
  for (unsigned i = 1; i <= c.max_m; ++i) {
    for (const auto& x : c.xs) {
      for (long n = 1; n <= c.max_n; ++n) {
        if (!decomposition_identity_check(x, n, i)) return fail(r, {{"i", i}, {"x", str(x)}, {"n", n}});
      }
    }
  }
  return r;
}

// ---- series ----

CheckResult series_reciprocal_sqrt(const SuiteConfig& c) {
  auto r = start("series.reciprocal_sqrt", {{"seed", c.seed}, {"samples", 30}, {"order", 10}});
  std::mt19937_64 rng(c.seed ^ 0x5e41ULL);
  using S = TruncatedSeries<Rational>;
  const S one = S::constant(Rational(1), "t");
  for (int s = 0; s < 30; ++s) {
    std::vector<Rational> cs(10);
    for (auto& v : cs) v = random_rational(rng);
    if (cs[0].is_zero()) cs[0] = Rational(2);
    const S a("t", 10, cs);
    if (!agree(a * reciprocal(a), one)) return fail(r, {{"sample", s}, {"op", "reciprocal"}});
    cs[0] = Rational(1);
    const S u("t", 10, cs);
    const S root = sqrt(u);
    const S neg = sqrt(u, RootSign::kNegative);
    if (!agree(root * root, u) || !agree(neg, -root)) return fail(r, {{"sample", s}, {"op", "sqrt"}});
  }
  return r;
}

SeriesOrders raised(SeriesOrders o, unsigned m, unsigned k) {
  o.y = std::max<std::size_t>(o.y, 2 * static_cast<std::size_t>(m) + 1);
  o.t = std::max<std::size_t>(o.t, static_cast<std::size_t>(k) + 1);
  return o;
}

CheckResult gf_report_check(const std::string& name, const GfReport& report) {
  auto r = start(name, {{"max_m", "0.." + std::to_string(report.entries.empty() ? 0 : report.entries.back().m)},
                        {"y_order", report.orders.y},
                        {"t_order", report.orders.t}});
  for (const auto& e : report.entries) {
    if (!e.pass) {
      return fail(r, {{"m", e.m}, {"k", e.k}, {"expected", render(e.expected, Format::kText)}, {"got", render(e.extracted, Format::kText)}});
    }
  }
  return r;
}

CheckResult gf_faulhaber(const SuiteConfig& c) {
  return gf_report_check("series.gf_faulhaber", gf_faulhaber_check(c.max_m, c.max_m, raised(c.orders, c.max_m, c.max_m)));
}

CheckResult gf_alternating(const SuiteConfig& c) {
  return gf_report_check("series.gf_alternating", gf_alternating_check(c.max_m, c.max_m, raised(c.orders, c.max_m, c.max_m)));
}

CheckResult euler_sqrt(const SuiteConfig& c) {
  auto r = start("series.euler_sqrt", {{"order", c.euler_sqrt_order}});
  const EulerSqrtReport report = euler_sqrt_check(c.euler_sqrt_order);
  if (!report.all_pass()) return fail(r, to_json(report));
  return r;
}

// ---- rfold ----

Json fold_params(const SuiteConfig& c, const std::string& fold, const std::string& power) {
  return Json{{"fold", fold}, {"power", power}, {"x", xs_json(c.xs)}, {"n", "1.." + std::to_string(c.max_n)}};
}

// First grid point where the closed form and the prefix-sum oracle differ, or null.
template <class TermAt>
Json first_mismatch(const RFoldClosedForm& form, TermAt term_at, const SuiteConfig& c) {
  for (const auto& x : c.xs) {
    const auto brute = rfold_bruteforce_table(form.fold, term_at(x), c.max_n);
    for (long n = 1; n <= c.max_n; ++n) {
      const Rational got = form.evaluate(x, n);
      const Rational& expected = brute[static_cast<std::size_t>(n - 1)];
      if (got != expected) {
        return Json{{"fold", form.fold}, {"index", form.m_or_l}, {"x", str(x)}, {"n", n}, {"expected", str(expected)}, {"got", str(got)}};
      }
    }
  }
  return nullptr;
}

CheckResult rfold_falling_oracle(const SuiteConfig& c) {
  const unsigned max_l = c.max_m + 2;
  auto r = start("rfold.falling_oracle", fold_params(c, "0.." + std::to_string(c.max_r), ""));
  r.params.erase("power");
  r.params["l"] = "0.." + std::to_string(max_l);
  for (unsigned fold = 0; fold <= c.max_r; ++fold) {
    for (unsigned l = 0; l <= max_l; ++l) {
      const RFoldClosedForm form = rfold_falling(fold, l);
      if (l > 0 && !divisible_by_inner_variable(form.correction)) return fail(r, {{"fold", fold}, {"l", l}, {"what", "correction at x=0"}});
      Json bad = first_mismatch(form, [l](const Rational& x) -> TermFn { return [x, l](long i) { return falling(x + Rational(i), l); }; }, c);
      if (!bad.is_null()) return fail(r, bad);
    }
  }
  return r;
}

CheckResult rfold_same_parity(const SuiteConfig& c, Parity kind) {
  const bool odd = kind == Parity::kOdd;
  auto r = start(odd ? "rfold.odd_power_oracle" : "rfold.even_power_oracle",
                 fold_params(c, odd ? "2r+1<=" + std::to_string(c.max_r) : "2r<=" + std::to_string(c.max_r),
                             odd ? "2m-1, m=1.." + std::to_string(c.max_m) : "2m, m=1.." + std::to_string(c.max_m)));
  for (unsigned rr = 0; (odd ? 2 * rr + 1 : 2 * rr) <= c.max_r; ++rr) {
    for (unsigned m = 1; m <= c.max_m; ++m) {
      const RFoldClosedForm form = odd ? rfold_odd(rr, m) : rfold_even(rr, m);
      if (!divisible_by_inner_variable(form.correction)) return fail(r, {{"r", rr}, {"m", m}, {"what", "correction at x=0"}});
      const unsigned power = odd ? 2 * m - 1 : 2 * m;
      Json bad = first_mismatch(form, [power](const Rational& x) { return shifted_power(x, power); }, c);
      if (!bad.is_null()) return fail(r, bad);
    }
  }
  return r;
}

CheckResult rfold_odd_oracle(const SuiteConfig& c) { return rfold_same_parity(c, Parity::kOdd); }
CheckResult rfold_even_oracle(const SuiteConfig& c) { return rfold_same_parity(c, Parity::kEven); }

CheckResult rfold_mixed(const SuiteConfig& c) {
  auto r = start("rfold.mixed_parity_dispatch", fold_params(c, "1.." + std::to_string(c.max_r), "0.." + std::to_string(c.max_m)));
  for (unsigned fold = 1; fold <= c.max_r; ++fold) {
    for (unsigned power = 0; power <= c.max_m; ++power) {
      if (power > 0 && fold % 2 == power % 2) continue;
      Json bad = first_mismatch(rfold_power(fold, power), [power](const Rational& x) { return shifted_power(x, power); }, c);
      if (!bad.is_null()) return fail(r, bad);
    }
  }
  return r;
}

CheckResult rfold_half_split(const SuiteConfig& c) {
  const unsigned max = c.max_m + 2;
  auto r = start("rfold.half_split", {{"k", "1.." + std::to_string(max)}});
  for (unsigned k = 1; k <= max; ++k) {
    if (!half_split_check(k)) return fail(r, {{"k", k}});
  }
  return r;
}

CheckResult rfold_telescoping(const SuiteConfig&) {
  auto r = start("rfold.telescoping", {{"l", "0..10"}, {"n", "1..30"}});
  for (unsigned l = 0; l <= 10; ++l) {
    for (long n = 1; n <= 30; ++n) {
      if (!telescoping_check(l, n)) return fail(r, {{"l", l}, {"n", n}});
    }
  }
  return r;
}

CheckResult rfold_polynomiality(const SuiteConfig& c) {
  const unsigned max_r = c.max_r / 2;
  auto r = start("rfold.polynomiality_rewrite", {{"r", "0.." + std::to_string(max_r)}, {"k", "1.." + std::to_string(c.max_m)}});
  for (unsigned rr = 0; rr <= max_r; ++rr) {
    for (unsigned k = 1; k <= c.max_m; ++k) {
      for (Parity kind : {Parity::kOdd, Parity::kEven}) {
        const auto report = polynomiality_rewrite(kind, rr, k);
        if (compose(report.in_nu, report.nu) != report.closed_form) {
          return fail(r, {{"r", rr}, {"k", k}, {"kind", kind == Parity::kOdd ? "odd" : "even"}});
        }
      }
    }
  }
  return r;
}

// ---- alternating ----

CheckResult alt_closed_oracle(const SuiteConfig& c) {
  auto r = start("alternating.closed_form_oracle", Json{{"r", "1.." + std::to_string(c.max_r)}, {"m", "0.." + std::to_string(c.max_m)}, {"x", xs_json(c.xs)}, {"n", "1.." + std::to_string(c.max_n)}});
  for (unsigned rr = 1; rr <= c.max_r; ++rr) {
    for (unsigned m = 0; m <= c.max_m; ++m) {
      for (const auto& x : c.xs) {
        const auto brute = alt_bruteforce_table(rr, m, x, c.max_n);
        const Poly even = alt_rfold_closed_poly(rr, m, x, Parity::kEven);
        const Poly odd = alt_rfold_closed_poly(rr, m, x, Parity::kOdd);
        for (long n = 1; n <= c.max_n; ++n) {
          const Rational& expected = brute[static_cast<std::size_t>(n - 1)];
          const Rational got = (n % 2 == 0 ? even : odd)(Rational(n));
          if (got != expected) return fail(r, {{"r", rr}, {"m", m}, {"x", str(x)}, {"n", n}, {"expected", str(expected)}, {"got", str(got)}});
        }
      }
    }
  }
  return r;
}

CheckResult convolution_symmetry(const SuiteConfig& c) {
  auto r = start("alternating.convolution_symmetry", {{"seed", c.seed}, {"samples", 10}, {"m", "0.." + std::to_string(c.max_m)}});
  std::mt19937_64 rng(c.seed ^ 0xc0deULL);
  for (int s = 0; s < 10; ++s) {
    std::vector<Rational> args{random_rational(rng), random_rational(rng), random_rational(rng)};
    std::vector<Rational> perm = args;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (unsigned m = 0; m <= c.max_m; ++m) {
      // E^(3)_m(a, b, c) is symmetric, and E^(2)_m(a, b) expands as sum C(m, i) E_i(a) E_{m-i}(b).
      if (euler_convolution(args, m) != euler_convolution(perm, m)) return fail(r, {{"sample", s}, {"m", m}, {"what", "symmetry"}});
      Rational pair;
      for (unsigned i = 0; i <= m; ++i) pair += Rational(binomial(m, i)) * euler_poly(i)(args[0]) * euler_poly(m - i)(args[1]);
      if (euler_convolution(std::vector<Rational>{args[0], args[1]}, m) != pair) return fail(r, {{"sample", s}, {"m", m}, {"what", "pair"}});
    }
  }
  return r;
}

CheckResult special_values(const SuiteConfig& c) {
  const unsigned max_k = c.max_r + 1;
  auto r = start("alternating.special_value_recurrence", {{"k", "1.." + std::to_string(max_k)}, {"m", "0.." + std::to_string(c.max_m)}});
  for (unsigned k = 1; k <= max_k; ++k) {
    for (unsigned m = 0; m <= c.max_m; ++m) {
      for (Parity p : {Parity::kEven, Parity::kOdd}) {
        if (special_value_recurrence(k, m, p) != special_value_direct(k, m, p)) {
          return fail(r, {{"k", k}, {"m", m}, {"parity", p == Parity::kEven ? "even" : "odd"}});
        }
      }
    }
  }
  return r;
}

CheckResult structure_fits(const SuiteConfig& c) {
  auto r = start("alternating.structure_fit", {{"fold", "1.." + std::to_string(c.max_r)}, {"power", "1.." + std::to_string(c.max_m)}});
  for (unsigned fold = 1; fold <= c.max_r; ++fold) {
    for (unsigned power = 1; power <= c.max_m; ++power) {
      const StructureFit fit = structure_fit(fold, power);
      if (fit.f.degree() != fit.f_degree_bound || fit.g.degree() != fit.g_degree_bound) {
        return fail(r, {{"fold", fold}, {"power", power}, {"f_degree", fit.f.degree()}, {"g_degree", fit.g.degree()}});
      }
      const auto brute = alt_bruteforce_table(fold, power, 0, fit.window);
      for (long n = 1; n <= fit.window; ++n) {
        if (fit.evaluate(n) != brute[static_cast<std::size_t>(n - 1)]) return fail(r, {{"fold", fold}, {"power", power}, {"n", n}});
      }
    }
  }
  return r;
}

CheckResult identity_entry(const std::string& name, const std::string& entry) {
  const IdentityReport report = identity_checks();
  for (const auto& e : report.entries) {
    if (e.name != entry) continue;
    Json params = e.params;
    Json witness = nullptr;
    if (params.contains("counterexample")) {
      witness = params.at("counterexample");
      params.erase("counterexample");
    }
    auto r = start(name, params);
    return e.pass ? r : fail(r, witness);
  }
  throw std::logic_error("missing identity entry " + entry);
}

CheckResult binomial_even_sum(const SuiteConfig&) { return identity_entry("alternating.binomial_even_sum", "binomial_even_sum"); }
CheckResult vandermonde(const SuiteConfig&) { return identity_entry("alternating.vandermonde_type", "vandermonde_type"); }
CheckResult even_alt_product(const SuiteConfig&) { return identity_entry("alternating.even_alt_product", "even_alternating_product"); }

CheckResult oracle_readings(const SuiteConfig&) {
  auto r = start("readings.oracle_resolution", Json::object());
  r.params["alternating_exponent"] = resolved_alternating_exponent() == AlternatingExponent::kDoubled ? "(x+1/2)^(2i-2k)" : "(x+1/2)^(i-k)";
  r.params["even_fold_denominator"] = resolved_even_fold_denominator() == EvenFoldDenominator::kPrinted ? "(2k+i)_i" : "(2k+i-1)_i";
  r.params["alternating_correction_sign"] = resolved_alt_correction_sign() == AltCorrectionSign::kMinus ? "-" : "+";
  r.params["odd_recurrence_sign"] = resolved_odd_recurrence_sign() == OddRecurrenceSign::kPlain ? "(-1)^j" : "(-1)^(j+1)";
  r.params["odd_odd_prefactor"] = resolved_odd_odd_prefactor() == OddOddPrefactor::kSymmetric ? "2n+2r+1" : "n+r";
  return r;
}

std::vector<CheckSpec> build_registry() {
  std::vector<CheckSpec> out{
      {"exact_algebra.field_axioms", field_axioms},
      {"exact_algebra.ring_axioms", ring_axioms},
      {"exact_algebra.interpolation_round_trip", interpolation_round_trip},
      {"exact_algebra.json_round_trip", json_round_trip},
      {"exact_algebra.falling_factorial", falling_factorial_step},
      {"bernoulli.numbers_oracle", bernoulli_numbers_oracle},
      {"bernoulli.translation", bernoulli_translation},
      {"bernoulli.reflection", bernoulli_reflection},
      {"bernoulli.derivative", bernoulli_derivative},
      {"bernoulli.addition", bernoulli_addition},
      {"bernoulli.half_values", bernoulli_half_values},
      {"euler.addition", euler_addition},
      {"euler.numbers_half_values", euler_numbers_half_values},
      {"euler.shift_relation", euler_shift_relation},
      {"central_factorial.expansion", central_factorial_expansion},
      {"faulhaber.odd_power_oracle", faulhaber_odd_oracle},
      {"faulhaber.bernoulli_difference", faulhaber_bernoulli_difference},
      {"faulhaber.gessel_viennot", gessel_viennot},
      {"faulhaber.alternating_oracle", alternating_oracle},
      {"faulhaber.progression_oracle", progression_oracle},
      {"faulhaber.lambda_decomposition", lambda_decomposition},
      {"series.reciprocal_sqrt", series_reciprocal_sqrt},
      {"series.gf_faulhaber", gf_faulhaber},
      {"series.gf_alternating", gf_alternating},
      {"series.euler_sqrt", euler_sqrt},
      {"rfold.falling_oracle", rfold_falling_oracle},
      {"rfold.odd_power_oracle", rfold_odd_oracle},
      {"rfold.even_power_oracle", rfold_even_oracle},
      {"rfold.mixed_parity_dispatch", rfold_mixed},
      {"rfold.half_split", rfold_half_split},
      {"rfold.telescoping", rfold_telescoping},
      {"rfold.polynomiality_rewrite", rfold_polynomiality},
      {"alternating.closed_form_oracle", alt_closed_oracle},
      {"alternating.convolution_symmetry", convolution_symmetry},
      {"alternating.special_value_recurrence", special_values},
      {"alternating.structure_fit", structure_fits},
      {"alternating.binomial_even_sum", binomial_even_sum},
      {"alternating.vandermonde_type", vandermonde},
      {"alternating.even_alt_product", even_alt_product},
      {"readings.oracle_resolution", oracle_readings},
  };
  std::sort(out.begin(), out.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.name < b.name; });
  return out;
}

CheckResult guarded(const CheckSpec& spec, const SuiteConfig& config) {
  try {
    return spec.run(config);
  } catch (const std::exception& e) {
    CheckResult r;
    r.name = spec.name;
    r.pass = false;
    r.counterexample = Json{{"error", e.what()}};
    return r;
  }
}

}  // namespace

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> registry = build_registry();
  return registry;
}

CheckResult run_check(const std::string& name, const SuiteConfig& config) {
  for (const auto& spec : check_registry()) {
    if (spec.name == name) return guarded(spec, config);
  }
  throw std::out_of_range("unknown check '" + name + "'");
}

std::vector<CheckResult> run_checks(const SuiteConfig& config, bool parallel) {
  std::vector<CheckResult> out;
  if (parallel) {
    std::vector<std::future<CheckResult>> jobs;
    for (const auto& spec : check_registry()) {
      jobs.push_back(std::async(std::launch::async, [&spec, &config] { return guarded(spec, config); }));
    }
    for (auto& j : jobs) out.push_back(j.get());
  } else {
    for (const auto& spec : check_registry()) out.push_back(guarded(spec, config));
  }
  std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return out;
}

Json report_json(const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  bool all = true;
  for (const auto& r : results) {
    checks.push_back(Json{{"name", r.name}, {"params", r.params}, {"pass", r.pass}, {"counterexample", r.counterexample}});
    all = all && r.pass;
  }
  return Json{{"checks", std::move(checks)}, {"all_pass", all}};
}

std::string report_text(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : results) {
    os << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  " << r.params.dump();
    if (!r.pass) os << "  counterexample " << r.counterexample.dump();
    os << '\n';
    if (r.pass) ++passed;
  }
  os << passed << "/" << results.size() << " checks passed\n";
  return os.str();
}

}  // namespace psum
