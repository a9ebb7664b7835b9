#include "psum/alternating.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "psum/rfold.hpp"
#include "psum/special_sequences.hpp"

namespace psum {

namespace {

const Rational kHalf(1, 2);

const std::array<Rational, 4> kOracleXs{Rational(0), Rational(1), Rational(-1, 2), Rational(2, 3)};

Rational binom(long n, long k) { return Rational(binomial(n, k)); }

// C(v, k) for a rational upper argument.
Rational binom_at(const Rational& v, unsigned k) { return falling(v, k) / Rational(factorial(k)); }

bool is_even_integer(const Rational& n) {
  if (!n.is_integer()) throw std::invalid_argument("n must be an integer, got " + n.to_string());
  return mpz_even_p(n.numerator().get_mpz_t()) != 0;
}

// E^(j)_i(args) for i = 0..m.
std::vector<Rational> convolution_row(std::span<const Rational> args, unsigned m) {
  std::vector<Rational> c(m + 1);
  c[0] = Rational(1);
  for (const auto& a : args) {
    std::vector<Rational> e(m + 1);
    for (unsigned i = 0; i <= m; ++i) e[i] = euler_poly(i)(a);
    std::vector<Rational> next(m + 1);
    for (unsigned k = 0; k <= m; ++k) {
      for (unsigned j = 0; j <= k; ++j) {
        if (c[j].is_zero() || e[k - j].is_zero()) continue;
        next[k] += binom(k, j) * c[j] * e[k - j];
      }
    }
    c = std::move(next);
  }
  return c;
}

std::vector<Rational> halves(unsigned count) { return std::vector<Rational>(count, kHalf); }

}  // namespace

namespace {

TermFn alternating_term(unsigned m, const Rational& x) {
  return [m, x](long i) {
    const Rational v = pow(x + Rational(i), m);
    return i % 2 == 0 ? v : -v;
  };
}

}  // namespace

std::vector<Rational> alt_bruteforce_table(unsigned r, unsigned m, const Rational& x, long count) {
  return rfold_bruteforce_table(r, alternating_term(m, x), count);
}

Rational alt_bruteforce(unsigned r, unsigned m, const Rational& x, long n) {
  if (r == 0) throw std::invalid_argument("alt_bruteforce needs r >= 1");
  if (n < 1) throw std::invalid_argument("alt_bruteforce needs n >= 1");
  return rfold_bruteforce(r, alternating_term(m, x), n);
}

Rational euler_convolution(std::span<const Rational> args, unsigned m) { return convolution_row(args, m)[m]; }

Poly euler_convolution(std::span<const Rational> args, const Poly& last, unsigned m) {
  const auto c = convolution_row(args, m);
  Poly out(last.variable());
  for (unsigned k = 0; k <= m; ++k) {
    if (c[k].is_zero()) continue;
    out += compose(euler_poly(m - k), last) * (binom(m, k) * c[k]);
  }
  return out;
}

Rational euler_convolution_halves(unsigned k, unsigned m, const Rational& last) {
  if (k == 0) throw std::invalid_argument("euler_convolution_halves needs k >= 1");
  auto args = halves(k - 1);
  args.push_back(last);
  return euler_convolution(args, m);
}

Poly euler_convolution_halves(unsigned k, unsigned m, const Poly& last) {
  if (k == 0) throw std::invalid_argument("euler_convolution_halves needs k >= 1");
  return euler_convolution(halves(k - 1), last, m);
}

Rational alt_rfold_closed(unsigned r, unsigned m, const Rational& x, const Rational& n, AltCorrectionSign sign) {
  if (r == 0) throw std::invalid_argument("alt_rfold_closed needs r >= 1");
  const long rr = r;
  const Rational last = x + n + Rational(rr, 2) + kHalf;
  Rational main = euler_convolution_halves(r, m, last) * pow(Rational(2), -rr);
  if (!is_even_integer(n)) main = -main;
  Rational correction;
  for (long k = 1; k <= rr; ++k) {
    correction += binom_at(n + Rational(rr - k - 1), static_cast<unsigned>(rr - k)) * pow(Rational(2), -k) *
                  euler_convolution_halves(static_cast<unsigned>(k), m, x + Rational(k + 1, 2));
  }
  return sign == AltCorrectionSign::kPlus ? main + correction : main - correction;
}

Rational alt_rfold_closed(unsigned r, unsigned m, const Rational& x, const Rational& n) {
  return alt_rfold_closed(r, m, x, n, resolved_alt_correction_sign());
}

Poly alt_rfold_closed_poly(unsigned r, unsigned m, const Rational& x, Parity parity, AltCorrectionSign sign) {
  if (r == 0) throw std::invalid_argument("alt_rfold_closed_poly needs r >= 1");
  const long rr = r;
  const Poly n = Poly::identity("n");
  Poly main = euler_convolution_halves(r, m, n + (x + Rational(rr, 2) + kHalf)) * pow(Rational(2), -rr);
  if (parity == Parity::kOdd) main = -main;
  Poly correction("n");
  for (long k = 1; k <= rr; ++k) {
    correction += binomial_poly(n + Rational(rr - k - 1), static_cast<unsigned>(rr - k)) *
                  (pow(Rational(2), -k) * euler_convolution_halves(static_cast<unsigned>(k), m, x + Rational(k + 1, 2)));
  }
  return (sign == AltCorrectionSign::kPlus ? main + correction : main - correction).with_variable("n");
}

Poly alt_rfold_closed_poly(unsigned r, unsigned m, const Rational& x, Parity parity) {
  return alt_rfold_closed_poly(r, m, x, parity, resolved_alt_correction_sign());
}

bool alt_sign_matches_oracle(AltCorrectionSign sign, unsigned max_r, unsigned max_m) {
  for (unsigned r = 1; r <= max_r; ++r) {
    for (unsigned m = 0; m <= max_m; ++m) {
      for (const auto& x : kOracleXs) {
        const auto brute = alt_bruteforce_table(r, m, x, 8);
        for (long n = 1; n <= 8; ++n) {
          if (alt_rfold_closed(r, m, x, Rational(n), sign) != brute[static_cast<std::size_t>(n - 1)]) return false;
        }
      }
    }
  }
  return true;
}

AltCorrectionSign resolved_alt_correction_sign() {
  static const AltCorrectionSign resolved = [] {
    const bool plus = alt_sign_matches_oracle(AltCorrectionSign::kPlus, 3, 4);
    const bool minus = alt_sign_matches_oracle(AltCorrectionSign::kMinus, 3, 4);
    if (plus == minus) throw IdentityViolation("alternating correction sign: oracle did not single out one reading");
    return plus ? AltCorrectionSign::kPlus : AltCorrectionSign::kMinus;
  }();
  return resolved;
}

Rational special_value_recurrence(unsigned k, unsigned m, Parity parity, OddRecurrenceSign sign) {
  if (k == 0) throw std::invalid_argument("special_value_recurrence needs k >= 1");
  const long kk = k;
  Rational total;
  for (long i = 0; 2 * i <= kk; ++i) {
    const Rational outer = parity == Parity::kEven ? binom(kk, 2 * i) : binom(kk, 2 * i + 1);
    if (outer.is_zero()) continue;
    Rational inner;
    for (long j = 0; j <= i; ++j) {
      Rational term;
      if (parity == Parity::kEven) {
        term = euler_convolution(halves(static_cast<unsigned>(2 * j)), 2 * m);
      } else {
        term = euler_convolution_halves(static_cast<unsigned>(2 * j + 1), 2 * m + 1, Rational(1));
      }
      const bool negative = parity == Parity::kEven || sign == OddRecurrenceSign::kPlain ? j % 2 == 1 : j % 2 == 0;
      inner += negative ? -(binom(i, j) * term) : binom(i, j) * term;
    }
    total += outer * inner;
  }
  return total;
}

Rational special_value_recurrence(unsigned k, unsigned m, Parity parity) {
  return special_value_recurrence(k, m, parity, resolved_odd_recurrence_sign());
}

Rational special_value_direct(unsigned k, unsigned m, Parity parity) {
  const unsigned power = parity == Parity::kEven ? 2 * m : 2 * m + 1;
  return euler_convolution_halves(k, power, Rational(static_cast<long>(k) + 1, 2));
}

bool odd_recurrence_sign_matches(OddRecurrenceSign sign, unsigned max_k, unsigned max_m) {
  for (unsigned k = 1; k <= max_k; ++k) {
    for (unsigned m = 0; m <= max_m; ++m) {
      if (special_value_recurrence(k, m, Parity::kOdd, sign) != special_value_direct(k, m, Parity::kOdd)) return false;
    }
  }
  return true;
}

OddRecurrenceSign resolved_odd_recurrence_sign() {
  static const OddRecurrenceSign resolved = [] {
    const bool printed = odd_recurrence_sign_matches(OddRecurrenceSign::kPrinted, 6, 8);
    const bool plain = odd_recurrence_sign_matches(OddRecurrenceSign::kPlain, 6, 8);
    if (printed == plain) throw IdentityViolation("odd recurrence sign: oracle did not single out one reading");
    return printed ? OddRecurrenceSign::kPrinted : OddRecurrenceSign::kPlain;
  }();
  return resolved;
}

Rational StructureFit::evaluate(long n) const {
  const Rational nn(n);
  const Rational v = nu(nn);
  Rational main = f_prefactor(nn) * f(v);
  if (n % 2 != 0) main = -main;
  return main + g_prefactor(nn) * g(v);
}

StructureFit structure_fit(unsigned fold, unsigned power, OddOddPrefactor prefactor) {
  if (fold == 0) throw std::invalid_argument("structure_fit needs fold >= 1");
  const Poly n = Poly::identity("n");
  const bool odd_fold = fold % 2 == 1;
  const bool odd_power = power % 2 == 1;
  StructureFit fit;
  fit.fold = fold;
  fit.power = power;
  fit.r = fold / 2;
  fit.m = power / 2;
  const long r = fit.r;
  const int m = static_cast<int>(fit.m);
  fit.label = std::string("(") + (odd_fold ? "2r+1" : "2r") + "," + (odd_power ? "2m+1" : "2m") + ")";
  fit.nu = odd_fold ? n * (n + Rational(2 * r + 1)) : n * (n + Rational(2 * r));
  const Poly one = Poly::constant(Rational(1), "n");
  const Poly n_plus_r = n + Rational(r);
  const Poly symmetric = n * Rational(2) + Rational(2 * r + 1);
  fit.f_degree_bound = m;
  if (!odd_fold && !odd_power) {
    fit.f_prefactor = one;
    fit.g_prefactor = one;
    fit.g_degree_bound = static_cast<int>(r) - 1;
  } else if (odd_fold && !odd_power) {
    fit.f_prefactor = one;
    fit.g_prefactor = symmetric;
    fit.g_degree_bound = static_cast<int>(r) - 1;
  } else if (!odd_fold && odd_power) {
    fit.f_prefactor = n_plus_r;
    fit.g_prefactor = n_plus_r;
    fit.g_degree_bound = static_cast<int>(r) - 1;
  } else {
    fit.f_prefactor = prefactor == OddOddPrefactor::kPrinted ? n_plus_r : symmetric;
    fit.g_prefactor = one;
    fit.g_degree_bound = static_cast<int>(r);
  }

  const long degree = std::max<long>(power, static_cast<long>(fold) - 1);
  const long per_parity = degree + 3;
  fit.window = 2 * degree + 10;
  const auto brute = alt_bruteforce_table(fold, power, Rational(0), std::max(fit.window, 2 * per_parity));
  auto at = [&](long k) { return brute[static_cast<std::size_t>(k - 1)]; };

  std::vector<std::pair<Rational, Rational>> even_pts;
  std::vector<std::pair<Rational, Rational>> odd_pts;
  for (long i = 1; i <= per_parity; ++i) {
    even_pts.emplace_back(Rational(2 * i), at(2 * i));
    odd_pts.emplace_back(Rational(2 * i - 1), at(2 * i - 1));
  }
  const Poly p_even = interpolate(even_pts, "n");
  const Poly p_odd = interpolate(odd_pts, "n");
  if (p_even.degree() > degree || p_odd.degree() > degree) {
    throw StructureViolation(fit.label + ": parity component exceeds degree " + std::to_string(degree));
  }
  const Poly f_part = (p_even - p_odd) * kHalf;
  const Poly g_part = (p_even + p_odd) * kHalf;

  auto to_nu = [&](const Poly& part, const Poly& pref, const char* which) {
    const DivMod d = divmod(part, pref);
    if (!d.remainder.is_zero()) {
      throw StructureViolation(fit.label + ": prefactor " + render(pref, Format::kText) + " does not divide the " +
                               which + " component");
    }
    const QuadraticBasis basis = to_quadratic_basis(d.quotient.with_variable("n"), fit.nu, "nu");
    if (!basis.residual.is_zero()) {
      throw StructureViolation(fit.label + ": " + which + " component is not a polynomial in nu");
    }
    return basis.in_nu;
  };
  fit.f = to_nu(f_part, fit.f_prefactor, "F");
  fit.g = to_nu(g_part, fit.g_prefactor, "G");
  if (fit.f.degree() > fit.f_degree_bound || fit.g.degree() > fit.g_degree_bound) {
    throw StructureViolation(fit.label + ": degrees (" + std::to_string(fit.f.degree()) + ", " +
                             std::to_string(fit.g.degree()) + ") exceed bounds (" + std::to_string(fit.f_degree_bound) +
                             ", " + std::to_string(fit.g_degree_bound) + ")");
  }
  for (long k = 1; k <= fit.window; ++k) {
    if (fit.evaluate(k) != at(k)) {
      throw StructureViolation(fit.label + ": reconstruction differs from the oracle at n = " + std::to_string(k));
    }
  }
  return fit;
}

OddOddPrefactor resolved_odd_odd_prefactor() {
  static const OddOddPrefactor resolved = [] {
    auto passes = [](OddOddPrefactor p) {
      try {
        for (unsigned fold : {1U, 3U, 5U}) {
          for (unsigned power : {1U, 3U, 5U}) structure_fit(fold, power, p);
        }
        return true;
      } catch (const StructureViolation&) {
        return false;
      }
    };
    const bool printed = passes(OddOddPrefactor::kPrinted);
    const bool symmetric = passes(OddOddPrefactor::kSymmetric);
    if (printed == symmetric) throw IdentityViolation("odd-odd prefactor: oracle did not single out one reading");
    return printed ? OddOddPrefactor::kPrinted : OddOddPrefactor::kSymmetric;
  }();
  return resolved;
}

StructureFit structure_fit(unsigned fold, unsigned power) {
  const bool odd_odd = fold % 2 == 1 && power % 2 == 1;
  return structure_fit(fold, power, odd_odd ? resolved_odd_odd_prefactor() : OddOddPrefactor::kSymmetric);
}

Json to_json(const StructureFit& fit) {
  const std::string nu_text = fit.fold % 2 == 1 ? "n(n+2r+1)" : "n(n+2r)";
  return Json{{"fold", fit.fold},
              {"power", fit.power},
              {"r", fit.r},
              {"m", fit.m},
              {"case", fit.label},
              {"nu_definition", nu_text},
              {"nu", to_json(fit.nu)},
              {"f_prefactor", to_json(fit.f_prefactor)},
              {"g_prefactor", to_json(fit.g_prefactor)},
              {"F", to_json(fit.f)},
              {"G", to_json(fit.g)},
              {"f_degree", fit.f.degree()},
              {"g_degree", fit.g.degree()},
              {"f_degree_bound", fit.f_degree_bound},
              {"g_degree_bound", fit.g_degree_bound},
              {"window", fit.window}};
}

bool IdentityReport::all_pass() const {
  for (const auto& e : entries) {
    if (!e.pass) return false;
  }
  return true;
}

bool binomial_even_sum_check(long j, long n) {
  Rational lhs;
  for (long i = j; 2 * i <= n; ++i) lhs += binom(n, 2 * i) * binom(i, j);
  const Rational rhs = pow(Rational(2), n - 2 * j - 1) * binom(n - j, j) * Rational(n, n - j);
  return lhs == rhs;
}

bool vandermonde_type_check(long i, long j, long n, long m) {
  BigInt lhs = 0;
  for (long k = -m; k <= n; ++k) lhs += binomial(n - k, i) * binomial(m + k, j);
  return lhs == binomial(m + n + 1, i + j + 1);
}

bool even_alt_product_check(unsigned r, unsigned j) {
  const Poly n = Poly::identity("n");
  const long rr = r;
  const long jj = j;
  const Poly lhs = (n + Rational(rr)) * falling_factorial(n + Rational(2 * rr - jj - 1), static_cast<unsigned>(2 * rr - 2 * jj - 1));
  const Poly nu = n * (n + Rational(2 * rr));
  Poly rhs = Poly::constant(Rational(1), "n");
  for (long i = 1; i <= rr - jj; ++i) rhs *= nu + Rational((2 * rr - jj - i) * (i + jj));
  return lhs == rhs;
}

IdentityReport identity_checks() {
  IdentityReport report;

  IdentityEntry even_sum{"binomial_even_sum", Json{{"j", "1..n-1"}, {"n", "2..24"}}, true};
  for (long n = 2; n <= 24 && even_sum.pass; ++n) {
    for (long j = 1; j < n; ++j) {
      if (!binomial_even_sum_check(j, n)) {
        even_sum.pass = false;
        even_sum.params["counterexample"] = Json{{"j", j}, {"n", n}};
        break;
      }
    }
  }
  report.entries.push_back(std::move(even_sum));

  IdentityEntry vandermonde{"vandermonde_type", Json{{"i", "0..6"}, {"j", "0..6"}, {"n", "0..20"}, {"m", "0..20"}}, true};
  for (long i = 0; i <= 6 && vandermonde.pass; ++i) {
    for (long j = 0; j <= 6 && vandermonde.pass; ++j) {
      for (long n = 0; n <= 20 && vandermonde.pass; ++n) {
        for (long m = 0; m <= 20; ++m) {
          if (!vandermonde_type_check(i, j, n, m)) {
            vandermonde.pass = false;
            vandermonde.params["counterexample"] = Json{{"i", i}, {"j", j}, {"n", n}, {"m", m}};
            break;
          }
        }
      }
    }
  }
  report.entries.push_back(std::move(vandermonde));

  IdentityEntry product{"even_alternating_product", Json{{"r", "1..5"}, {"j", "0..r-1"}}, true};
  for (unsigned r = 1; r <= 5 && product.pass; ++r) {
    for (unsigned j = 0; j < r; ++j) {
      if (!even_alt_product_check(r, j)) {
        product.pass = false;
        product.params["counterexample"] = Json{{"r", r}, {"j", j}};
        break;
      }
    }
  }
  report.entries.push_back(std::move(product));
  return report;
}

}  // namespace psum
