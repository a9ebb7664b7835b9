#include "psum/rfold.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "psum/special_sequences.hpp"

namespace psum {

namespace {

const BiPoly& n_var() {
  static const BiPoly n = BiPoly::identity("n");
  return n;
}

// x + n + c as a polynomial in n over x.
BiPoly x_plus_n(long c) { return n_var() + (Poly::identity("x") + Rational(c)); }

// (x + c)_l as an n-constant bivariate polynomial.
BiPoly x_falling(long c, unsigned l) {
  return BiPoly::constant(falling_factorial(Poly::identity("x") + Rational(c), l), "n");
}

BiPoly n_binomial(long shift, unsigned k) { return binomial_poly(n_var() + Rational(shift), k); }

Rational int_falling(long a, unsigned k) { return falling(Rational(a), k); }

const std::array<Rational, 4> kOracleXs{Rational(0), Rational(1), Rational(-1, 2), Rational(2, 3)};

}  // namespace

std::vector<Rational> rfold_bruteforce_table(unsigned r, const TermFn& f, long n) {
  std::vector<Rational> values;
  if (n < 1) return values;
  values.reserve(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) values.push_back(f(i));
  for (unsigned level = 0; level < r; ++level) {
    for (std::size_t i = 1; i < values.size(); ++i) values[i] += values[i - 1];
  }
  return values;
}

Rational rfold_bruteforce(unsigned r, const TermFn& f, long n) {
  if (n < 1) throw std::invalid_argument("rfold_bruteforce needs n >= 1");
  if (r == 0) return f(n);
  // levels[j] holds Sigma^{j+1} f at the current i.
  std::vector<Rational> levels(r);
  for (long i = 1; i <= n; ++i) {
    levels[0] += f(i);
    for (unsigned j = 1; j < r; ++j) levels[j] += levels[j - 1];
  }
  return levels.back();
}

TermFn shifted_power(const Rational& x, unsigned power) {
  return [x, power](long i) { return pow(x + Rational(i), power); };
}

std::string to_string(RFoldKind kind) {
  switch (kind) {
    case RFoldKind::kFallingFactorial:
      return "falling_factorial";
    case RFoldKind::kOddPower:
      return "odd_power";
    case RFoldKind::kEvenPower:
      return "even_power";
    case RFoldKind::kInterpolated:
      return "interpolated";
  }
  return "unknown";
}

Rational RFoldClosedForm::evaluate(const Rational& x, const Rational& n) const {
  return psum::evaluate(value, Bindings{{"n", n}, {"x", x}});
}

Poly RFoldClosedForm::at_zero() const { return bind_inner(value, Rational(0)); }

RFoldClosedForm rfold_falling(unsigned r, unsigned l) {
  const long rr = r;
  const long ll = l;
  RFoldClosedForm out;
  out.fold = r;
  out.m_or_l = l;
  out.kind = RFoldKind::kFallingFactorial;
  out.correction = BiPoly("n");
  for (long i = 1; i <= rr; ++i) {
    out.correction += n_binomial(rr - i - 1, static_cast<unsigned>(rr - i)) *
                      (x_falling(i, static_cast<unsigned>(ll + i)) * (Rational(1) / int_falling(ll + i, static_cast<unsigned>(i))));
  }
  const BiPoly main = falling_factorial(x_plus_n(rr), l + r) * (Rational(1) / int_falling(ll + rr, r));
  out.value = main - out.correction;
  return out;
}

RFoldClosedForm rfold_odd(unsigned r, unsigned m) {
  if (m == 0) throw std::invalid_argument("rfold_odd needs m >= 1");
  const long rr = r;
  const auto& t = central_factorial_table();
  RFoldClosedForm out;
  out.fold = 2 * r + 1;
  out.m_or_l = 2 * m - 1;
  out.kind = RFoldKind::kOddPower;
  BiPoly main("n");
  out.correction = BiPoly("n");
  for (long k = 1; k <= static_cast<long>(m); ++k) {
    const Rational coeff = t.at(2 * m, static_cast<unsigned>(2 * k));
    if (coeff.is_zero()) continue;
    main += falling_factorial(x_plus_n(k + 2 * rr), static_cast<unsigned>(2 * k + 2 * rr)) *
            (coeff / int_falling(2 * k + 2 * rr, static_cast<unsigned>(2 * rr + 1)));
    for (long i = 1; i <= 2 * rr + 1; ++i) {
      out.correction += n_binomial(2 * rr - i, static_cast<unsigned>(2 * rr - i + 1)) *
                        x_falling(k + i - 1, static_cast<unsigned>(2 * k + i - 1)) *
                        (coeff / int_falling(2 * k + i - 1, static_cast<unsigned>(i)));
    }
  }
  out.value = main - out.correction;
  return out;
}

RFoldClosedForm rfold_even(unsigned r, unsigned m, EvenFoldDenominator denominator) {
  if (m == 0) throw std::invalid_argument("rfold_even needs m >= 1");
  const long rr = r;
  const auto& t = central_factorial_table();
  const Poly x = Poly::identity("x");
  RFoldClosedForm out;
  out.fold = 2 * r;
  out.m_or_l = 2 * m;
  out.kind = RFoldKind::kEvenPower;
  BiPoly main("n");
  out.correction = BiPoly("n");
  for (long k = 1; k <= static_cast<long>(m); ++k) {
    if (!half_split_check(static_cast<unsigned>(k))) {
      throw IdentityViolation("half-split identity failed at k = " + std::to_string(k));
    }
    const Rational coeff = t.at(2 * m, static_cast<unsigned>(2 * k));
    if (coeff.is_zero()) continue;
    main += x_plus_n(rr) * falling_factorial(x_plus_n(k + 2 * rr - 1), static_cast<unsigned>(2 * k + 2 * rr - 1)) *
            (coeff / int_falling(2 * k + 2 * rr, static_cast<unsigned>(2 * rr)));
    for (long i = 1; i <= 2 * rr; ++i) {
      const long top = denominator == EvenFoldDenominator::kPrinted ? 2 * k + i : 2 * k + i - 1;
      const BiPoly two_x_plus_i = BiPoly::constant(x * Rational(2) + Rational(i), "n");
      out.correction += n_binomial(2 * rr - i - 1, static_cast<unsigned>(2 * rr - i)) * two_x_plus_i *
                        x_falling(k + i - 1, static_cast<unsigned>(2 * k + i - 1)) *
                        (coeff / (Rational(2) * int_falling(top, static_cast<unsigned>(i))));
    }
  }
  out.value = main - out.correction;
  return out;
}

RFoldClosedForm rfold_even(unsigned r, unsigned m) { return rfold_even(r, m, resolved_even_fold_denominator()); }

bool even_fold_reading_matches_oracle(EvenFoldDenominator denominator, unsigned max_r, unsigned max_m) {
  for (unsigned r = 1; r <= max_r; ++r) {
    for (unsigned m = 1; m <= max_m; ++m) {
      const RFoldClosedForm form = rfold_even(r, m, denominator);
      for (const auto& x : kOracleXs) {
        const auto brute = rfold_bruteforce_table(2 * r, shifted_power(x, 2 * m), 8);
        for (long n = 1; n <= 8; ++n) {
          if (form.evaluate(x, Rational(n)) != brute[static_cast<std::size_t>(n - 1)]) return false;
        }
      }
    }
  }
  return true;
}

EvenFoldDenominator resolved_even_fold_denominator() {
  static const EvenFoldDenominator resolved = [] {
    const bool printed = even_fold_reading_matches_oracle(EvenFoldDenominator::kPrinted, 2, 3);
    const bool shifted = even_fold_reading_matches_oracle(EvenFoldDenominator::kShifted, 2, 3);
    if (printed == shifted) throw IdentityViolation("even r-fold denominator: oracle did not single out one reading");
    return printed ? EvenFoldDenominator::kPrinted : EvenFoldDenominator::kShifted;
  }();
  return resolved;
}

RFoldClosedForm rfold_interpolated(unsigned fold, unsigned power) {
  const Poly x = Poly::identity("x");
  RFoldClosedForm out;
  out.fold = fold;
  out.m_or_l = power;
  out.kind = RFoldKind::kInterpolated;
  out.value = BiPoly("n");
  out.correction = BiPoly("n");
  for (unsigned j = 0; j <= power; ++j) {
    // Sigma^fold n^j has degree j + fold in n.
    const long samples = static_cast<long>(j + fold) + 1;
    const auto values = rfold_bruteforce_table(fold, shifted_power(Rational(0), j), samples);
    std::vector<std::pair<Rational, Rational>> points;
    for (long n = 1; n <= samples; ++n) points.emplace_back(Rational(n), values[static_cast<std::size_t>(n - 1)]);
    const Poly pure = interpolate(points, "n");
    const Poly weight = Poly::monomial("x", Rational(binomial(power, j)), power - j);
    out.value += lift(pure) * weight;
    if (j < power) out.correction += lift(pure) * weight;
  }
  return out;
}

RFoldClosedForm rfold_power(unsigned fold, unsigned power) {
  if (power == 0) {
    RFoldClosedForm out = rfold_falling(fold, 0);
    out.kind = RFoldKind::kFallingFactorial;
    return out;
  }
  if (fold % 2 == 1 && power % 2 == 1) return rfold_odd((fold - 1) / 2, (power + 1) / 2);
  if (fold % 2 == 0 && power % 2 == 0) return rfold_even(fold / 2, power / 2);
  return rfold_interpolated(fold, power);
}

bool half_split_check(unsigned k) {
  if (k == 0) throw std::invalid_argument("half_split_check needs k >= 1");
  const long kk = k;
  const BiPoly lhs = x_plus_n(0) * falling_factorial(x_plus_n(kk - 1), 2 * k - 1);
  const BiPoly rhs = (falling_factorial(x_plus_n(kk), 2 * k) + falling_factorial(x_plus_n(kk - 1), 2 * k)) *
                     Rational(1, 2);
  return lhs == rhs;
}

bool half_split_check(unsigned k, const Rational& x, const Rational& n) {
  if (k == 0) throw std::invalid_argument("half_split_check needs k >= 1");
  const Rational v = x + n;
  const Rational kk(static_cast<long>(k));
  const Rational lhs = v * falling(v + kk - Rational(1), 2 * k - 1);
  const Rational rhs = (falling(v + kk, 2 * k) + falling(v + kk - Rational(1), 2 * k)) / Rational(2);
  return lhs == rhs;
}

bool telescoping_check(unsigned l, long n) {
  BigInt acc = 0;
  for (long i = 1; i <= n; ++i) acc += binomial(static_cast<long>(l) + i - 1, l);
  return acc == binomial(static_cast<long>(l) + n, static_cast<long>(l) + 1);
}

PolynomialityReport polynomiality_rewrite(Parity kind, unsigned r, unsigned k) {
  if (k == 0) throw std::invalid_argument("polynomiality_rewrite needs k >= 1");
  const Poly n = Poly::identity("n");
  const long rr = r;
  PolynomialityReport report;
  report.kind = kind;
  report.r = r;
  report.k = k;
  report.nu = kind == Parity::kOdd ? n * (n + Rational(2 * rr + 1)) : n * (n + Rational(2 * rr));

  for (long j = 1; j <= static_cast<long>(k); ++j) {
    Poly product = Poly::constant(Rational(1), "n");
    Poly lhs;
    if (kind == Parity::kOdd) {
      lhs = falling_factorial(n + Rational(j + 2 * rr), static_cast<unsigned>(2 * j + 2 * rr));
      for (long i = 1; i <= j + rr; ++i) product *= report.nu - Rational((j + 2 * rr - i + 1) * (j - i));
    } else {
      lhs = (n + Rational(rr)) * falling_factorial(n + Rational(j + 2 * rr - 1), static_cast<unsigned>(2 * j + 2 * rr - 1));
      for (long i = 1; i <= j + rr; ++i) product *= report.nu + Rational((j + 2 * rr - i) * (i - j));
    }
    if (lhs != product) {
      throw IdentityViolation("lower-factorial product rewrite failed at r = " + std::to_string(r) +
                              ", k = " + std::to_string(j));
    }
  }

  const RFoldClosedForm form = kind == Parity::kOdd ? rfold_odd(r, k) : rfold_even(r, k);
  report.closed_form = form.at_zero().with_variable("n");
  const QuadraticBasis basis = to_quadratic_basis(report.closed_form, report.nu, "nu");
  if (!basis.residual.is_zero()) {
    throw IdentityViolation("x = 0 closed form is not a polynomial in nu for r = " + std::to_string(r) +
                            ", k = " + std::to_string(k));
  }
  report.in_nu = basis.in_nu;
  return report;
}

}  // namespace psum
