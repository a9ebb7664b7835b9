#include <array>
#include <vector>

#include "doctest.h"
#include "psum/rfold.hpp"

using namespace psum;

namespace {

const std::array<Rational, 4> kXs{Rational(0), Rational(1), Rational(-1, 2), Rational(2, 3)};

// Sigma^r by the nested definition, one level at a time, without prefix tables.
Rational nested_sum(unsigned r, const TermFn& f, long n) {
  if (r == 0) return f(n);
  Rational acc;
  for (long i = 1; i <= n; ++i) acc += nested_sum(r - 1, f, i);
  return acc;
}

}  // namespace

TEST_CASE("rfold_bruteforce") {
  CHECK(rfold_bruteforce(0, shifted_power(0, 3), 2) == Rational(8));
  CHECK(rfold_bruteforce(1, shifted_power(0, 1), 100) == Rational(5050));
  CHECK(rfold_bruteforce(2, shifted_power(0, 1), 3) == Rational(10));
  CHECK(rfold_bruteforce(3, shifted_power(0, 1), 3) == Rational(15));
  CHECK(rfold_bruteforce(2, shifted_power(0, 2), 3) == Rational(20));
  CHECK(rfold_bruteforce(2, shifted_power(1, 4), 2) == Rational(113));
  for (unsigned r = 0; r <= 4; ++r) {
    for (long n = 1; n <= 7; ++n) CHECK(rfold_bruteforce(r, shifted_power(Rational(1, 3), 3), n) == nested_sum(r, shifted_power(Rational(1, 3), 3), n));
  }
  // sum_{i<=n} (n + 1 - i) i^m is the 2-fold sum.
  for (long n = 1; n <= 9; ++n) {
    Rational weighted;
    for (long i = 1; i <= n; ++i) weighted += Rational(n + 1 - i) * pow(Rational(i), 3);
    CHECK(rfold_bruteforce(2, shifted_power(0, 3), n) == weighted);
  }
}

TEST_CASE("rfold_falling") {
  const std::array<long, 6> tetra{1, 4, 10, 20, 35, 56};
  const RFoldClosedForm f21 = rfold_falling(2, 1);
  for (long n = 1; n <= 6; ++n) CHECK(f21.evaluate(0, n) == Rational(tetra[static_cast<std::size_t>(n - 1)]));
  CHECK(f21.at_zero() == Poly("n", {0, Rational(1, 3), Rational(1, 2), Rational(1, 6)}));
  CHECK(rfold_falling(1, 1).at_zero() == Poly("n", {0, Rational(1, 2), Rational(1, 2)}));

  const Rational half(1, 2);
  const TermFn f = [&](long i) { return (half + Rational(i)) * (Rational(i) - half); };
  CHECK(rfold_falling(3, 2).evaluate(half, 4) == rfold_bruteforce(3, f, 4));

  for (unsigned r = 0; r <= 5; ++r) {
    for (unsigned l = 0; l <= 8; ++l) {
      const RFoldClosedForm form = rfold_falling(r, l);
      CHECK(divisible_by_inner_variable(form.correction) == (l > 0 || r == 0));
      for (const auto& x : kXs) {
        const TermFn term = [x, l](long i) { return falling(x + Rational(i), l); };
        const auto brute = rfold_bruteforce_table(r, term, 15);
        for (long n = 1; n <= 15; ++n) CHECK(form.evaluate(x, n) == brute[static_cast<std::size_t>(n - 1)]);
      }
    }
  }
}

TEST_CASE("rfold_odd") {
  CHECK(rfold_odd(0, 2).at_zero() == Poly("n", {0, 0, Rational(1, 4), Rational(1, 2), Rational(1, 4)}));
  CHECK(rfold_odd(1, 1).evaluate(0, 3) == Rational(15));
  for (unsigned r = 0; r <= 2; ++r) {
    for (unsigned m = 1; m <= 6; ++m) {
      const RFoldClosedForm form = rfold_odd(r, m);
      CHECK(form.fold == 2 * r + 1);
      CHECK(divisible_by_inner_variable(form.correction));
      for (const auto& x : kXs) {
        const auto brute = rfold_bruteforce_table(2 * r + 1, shifted_power(x, 2 * m - 1), 15);
        for (long n = 1; n <= 15; ++n) CHECK(form.evaluate(x, n) == brute[static_cast<std::size_t>(n - 1)]);
      }
    }
  }
}

TEST_CASE("rfold_even and its denominator reading") {
  CHECK(resolved_even_fold_denominator() == EvenFoldDenominator::kPrinted);
  CHECK_FALSE(even_fold_reading_matches_oracle(EvenFoldDenominator::kShifted, 2, 3));
  CHECK(rfold_even(1, 1).evaluate(0, 3) == Rational(20));
  CHECK(rfold_even(1, 2).evaluate(1, 2) == Rational(113));
  for (unsigned r = 0; r <= 2; ++r) {
    for (unsigned m = 1; m <= 6; ++m) {
      const RFoldClosedForm form = rfold_even(r, m);
      CHECK(divisible_by_inner_variable(form.correction));
      for (const auto& x : kXs) {
        const auto brute = rfold_bruteforce_table(2 * r, shifted_power(x, 2 * m), 15);
        for (long n = 1; n <= 15; ++n) CHECK(form.evaluate(x, n) == brute[static_cast<std::size_t>(n - 1)]);
      }
    }
  }
}

TEST_CASE("rfold_interpolated and dispatch") {
  for (unsigned fold = 0; fold <= 4; ++fold) {
    for (unsigned power = 0; power <= 5; ++power) {
      const RFoldClosedForm form = rfold_power(fold, power);
      if (power > 0 && fold % 2 != power % 2) CHECK(form.kind == RFoldKind::kInterpolated);
      const RFoldClosedForm interp = rfold_interpolated(fold, power);
      CHECK(interp.value == form.value);
      for (const auto& x : kXs) {
        const auto brute = rfold_bruteforce_table(fold, shifted_power(x, power), 10);
        for (long n = 1; n <= 10; ++n) CHECK(form.evaluate(x, n) == brute[static_cast<std::size_t>(n - 1)]);
      }
    }
  }
}

TEST_CASE("half_split_check") {
  for (unsigned k = 1; k <= 8; ++k) CHECK(half_split_check(k));
  CHECK(half_split_check(5, Rational(1, 3), 7));
  CHECK(half_split_check(1, Rational(-2, 9), 3));
}

TEST_CASE("telescoping binomial sum") {
  for (unsigned l = 0; l <= 10; ++l) {
    for (long n = 1; n <= 30; ++n) CHECK(telescoping_check(l, n));
  }
}

TEST_CASE("polynomiality_rewrite") {
  const auto odd01 = polynomiality_rewrite(Parity::kOdd, 0, 1);
  CHECK(odd01.nu == Poly("n", {0, 1, 1}));
  CHECK(odd01.in_nu == Poly("nu", {0, Rational(1, 2)}));

  // Sigma^3 n^3 has degree 6 in n, so degree 3 in nu = n(n+3).
  const auto odd12 = polynomiality_rewrite(Parity::kOdd, 1, 2);
  CHECK(compose(odd12.in_nu, odd12.nu) == odd12.closed_form);
  CHECK(odd12.in_nu.degree() == 3);

  const auto even11 = polynomiality_rewrite(Parity::kEven, 1, 1);
  CHECK(even11.in_nu == Poly("nu", {0, Rational(1, 12), Rational(1, 12)}));

  for (unsigned r = 0; r <= 3; ++r) {
    for (unsigned k = 1; k <= 5; ++k) {
      for (Parity kind : {Parity::kOdd, Parity::kEven}) {
        const auto report = polynomiality_rewrite(kind, r, k);
        CHECK(compose(report.in_nu, report.nu) == report.closed_form);
      }
    }
  }
}
