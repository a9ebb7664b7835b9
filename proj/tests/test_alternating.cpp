#include <algorithm>
#include <array>
#include <vector>

#include "doctest.h"
#include "psum/alternating.hpp"

using namespace psum;

namespace {

const std::array<Rational, 4> kXs{Rational(0), Rational(1), Rational(-1, 2), Rational(2, 3)};

// Multinomial expansion over compositions i_1 + ... + i_r = m, written out
// recursively; independent of the binomial-convolution route.
Rational multinomial_oracle(const std::vector<Rational>& args, unsigned m, std::size_t pos = 0) {
  if (pos + 1 == args.size()) return euler_poly(m)(args[pos]);
  Rational acc;
  for (unsigned i = 0; i <= m; ++i) {
    acc += Rational(binomial(m, i)) * euler_poly(i)(args[pos]) * multinomial_oracle(args, m - i, pos + 1);
  }
  return acc;
}

}  // namespace

TEST_CASE("alt_bruteforce") {
  CHECK(alt_bruteforce(1, 2, 0, 2) == Rational(3));
  CHECK(alt_bruteforce(1, 0, 0, 5) == Rational(-1));
  CHECK(alt_bruteforce(2, 1, 0, 3) == Rational(-2));
  CHECK(alt_bruteforce(1, 2, 0, 3) == Rational(-6));
  const std::vector<Rational> expected{-1, 2, -4, 6, -9, 12};
  const auto table = alt_bruteforce_table(2, 2, 0, 6);
  CHECK(table == expected);
}

TEST_CASE("euler_convolution") {
  CHECK(euler_convolution(std::vector<Rational>{1}, 2) == Rational(0));
  for (unsigned r = 1; r <= 4; ++r) CHECK(euler_convolution(std::vector<Rational>(r, Rational(1, 3)), 0) == Rational(1));
  CHECK(euler_convolution(std::vector<Rational>{Rational(1, 2), Rational(1, 2)}, 2) == Rational(-1, 2));

  std::vector<Rational> args{Rational(1, 2), Rational(-2, 3), Rational(5, 4)};
  for (unsigned m = 0; m <= 7; ++m) {
    const Rational v = euler_convolution(args, m);
    CHECK(v == multinomial_oracle(args, m));
    std::vector<Rational> perm = args;
    std::sort(perm.begin(), perm.end());
    do {
      CHECK(euler_convolution(perm, m) == v);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  // A polynomial last argument agrees with binding it afterwards.
  const Poly last = Poly("n", {Rational(3, 2), 1});
  for (unsigned m = 0; m <= 6; ++m) {
    const Poly p = euler_convolution(std::vector<Rational>{Rational(1, 2)}, last, m);
    for (long n = 0; n <= 4; ++n) {
      CHECK(p(Rational(n)) == euler_convolution(std::vector<Rational>{Rational(1, 2), last(Rational(n))}, m));
    }
  }
}

TEST_CASE("alt_rfold_closed and its correction sign") {
  CHECK(resolved_alt_correction_sign() == AltCorrectionSign::kMinus);
  CHECK_FALSE(alt_sign_matches_oracle(AltCorrectionSign::kPlus, 3, 4));
  CHECK(alt_rfold_closed(1, 2, 0, 2) == Rational(3));
  CHECK(alt_rfold_closed(1, 2, 0, 3) == Rational(-6));
  for (unsigned r = 1; r <= 4; ++r) {
    for (unsigned m = 0; m <= 8; ++m) {
      for (const auto& x : kXs) {
        const auto brute = alt_bruteforce_table(r, m, x, 15);
        const Poly even = alt_rfold_closed_poly(r, m, x, Parity::kEven);
        const Poly odd = alt_rfold_closed_poly(r, m, x, Parity::kOdd);
        for (long n = 1; n <= 15; ++n) {
          const Rational& b = brute[static_cast<std::size_t>(n - 1)];
          CHECK(alt_rfold_closed(r, m, x, n) == b);
          CHECK((n % 2 == 0 ? even : odd)(Rational(n)) == b);
        }
      }
    }
  }
}

TEST_CASE("special_value_recurrence") {
  CHECK(special_value_recurrence(1, 1, Parity::kEven) == Rational(0));
  CHECK(special_value_direct(1, 1, Parity::kEven) == euler_poly(2)(Rational(1)));
  CHECK(special_value_recurrence(2, 0, Parity::kEven) == Rational(1));
  CHECK(special_value_recurrence(2, 1, Parity::kEven) ==
        euler_convolution(std::vector<Rational>{Rational(1, 2), Rational(3, 2)}, 2));

  CHECK(resolved_odd_recurrence_sign() == OddRecurrenceSign::kPlain);
  CHECK_FALSE(odd_recurrence_sign_matches(OddRecurrenceSign::kPrinted, 6, 8));
  for (unsigned k = 1; k <= 6; ++k) {
    for (unsigned m = 0; m <= 8; ++m) {
      CHECK(special_value_recurrence(k, m, Parity::kEven) == special_value_direct(k, m, Parity::kEven));
      CHECK(special_value_recurrence(k, m, Parity::kOdd) == special_value_direct(k, m, Parity::kOdd));
    }
  }
}

TEST_CASE("structure_fit") {
  const StructureFit f22 = structure_fit(2, 2);
  CHECK(f22.f.degree() == 1);
  CHECK(f22.g.degree() == 0);
  const std::vector<Rational> expected{-1, 2, -4, 6, -9, 12};
  for (long n = 1; n <= 6; ++n) CHECK(f22.evaluate(n) == expected[static_cast<std::size_t>(n - 1)]);
  for (long n = 1; n <= 10; ++n) CHECK(f22.evaluate(n) == alt_bruteforce(2, 2, 0, n));

  const StructureFit f33 = structure_fit(3, 3);
  CHECK(f33.f.degree() == 1);
  CHECK(f33.g.degree() == 1);

  // Power 0 has a constant non-alternating part that no odd-fold prefactor
  // (2n+2r+1) can carry, and the even-fold G part is not a polynomial in nu.
  for (unsigned fold = 1; fold <= 5; ++fold) CHECK_THROWS_AS(structure_fit(fold, 0), StructureViolation);

  CHECK(resolved_odd_odd_prefactor() == OddOddPrefactor::kSymmetric);
  CHECK_THROWS_AS(structure_fit(3, 3, OddOddPrefactor::kPrinted), StructureViolation);

  for (unsigned r = 0; r <= 3; ++r) {
    for (unsigned m = 0; m <= 5; ++m) {
      for (unsigned fold : {2 * r, 2 * r + 1}) {
        if (fold == 0) continue;
        for (unsigned power : {2 * m, 2 * m + 1}) {
          if (power == 0) continue;
          const StructureFit fit = structure_fit(fold, power);
          CHECK(fit.f.degree() == fit.f_degree_bound);
          CHECK(fit.g.degree() == fit.g_degree_bound);
          if (fit.g_degree_bound < 0) CHECK(fit.g.is_zero());
          const auto brute = alt_bruteforce_table(fold, power, 0, fit.window);
          for (long n = 1; n <= fit.window; ++n) CHECK(fit.evaluate(n) == brute[static_cast<std::size_t>(n - 1)]);
        }
      }
    }
  }
}

TEST_CASE("identity checks") {
  CHECK(binomial_even_sum_check(1, 4));
  CHECK(vandermonde_type_check(0, 0, 5, 7));
  CHECK(even_alt_product_check(2, 1));
  const IdentityReport report = identity_checks();
  CHECK(report.entries.size() == 3);
  CHECK(report.all_pass());
}
