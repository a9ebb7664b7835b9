#pragma once

#include <functional>
#include <string>
#include <vector>

#include "psum/faulhaber.hpp"
#include "psum/polynomial.hpp"
#include "psum/rational.hpp"

namespace psum {

/// f(i) for the innermost level of an r-fold sum.
using TermFn = std::function<Rational(long)>;

/// Sigma^r f at n: Sigma^0 f(n) = f(n), Sigma^r f(n) = sum_{i<=n} Sigma^{r-1} f(i).
/// O(r n) time, O(r) memory.
Rational rfold_bruteforce(unsigned r, const TermFn& f, long n);
/// Values of Sigma^r f at 1..n (index 0 holds n = 1); O(r n).
std::vector<Rational> rfold_bruteforce_table(unsigned r, const TermFn& f, long n);

/// The term (x + i)^power.
TermFn shifted_power(const Rational& x, unsigned power);

enum class RFoldKind { kFallingFactorial, kOddPower, kEvenPower, kInterpolated };

std::string to_string(RFoldKind kind);

/// Closed form of Sigma^fold applied to (x+n)^m or (x+n)_l. `value` is a
/// polynomial in n (outer) over x (inner) and already includes `correction`,
/// the part of the formula that vanishes at x = 0.
struct RFoldClosedForm {
  unsigned fold = 0;
  unsigned m_or_l = 0;
  RFoldKind kind = RFoldKind::kFallingFactorial;
  BiPoly value;
  BiPoly correction;

  Rational evaluate(const Rational& x, const Rational& n) const;
  /// value at x = 0, a polynomial in n.
  Poly at_zero() const;
};

/// Sigma^r (x+n)_l = (x+n+r)_{l+r}/(l+r)_r - sum_{i=1}^r C(n+r-i-1, r-i) (x+i)_{l+i}/(l+i)_i.
RFoldClosedForm rfold_falling(unsigned r, unsigned l);

/// Sigma^{2r+1} (x+n)^{2m-1}, m >= 1, through T(2m, 2k) and lower factorials.
RFoldClosedForm rfold_odd(unsigned r, unsigned m);

/// Two readings of the denominator in the correction terms of the even case.
enum class EvenFoldDenominator {
  kPrinted,  // 2 (2k+i)_i
  kShifted,  // 2 (2k+i-1)_i, the index used by the falling-factorial formula
};

/// Sigma^{2r} (x+n)^{2m}, m >= 1. Checks the half-split identity for every k
/// it uses and throws IdentityViolation if one fails.
RFoldClosedForm rfold_even(unsigned r, unsigned m, EvenFoldDenominator denominator);
RFoldClosedForm rfold_even(unsigned r, unsigned m);

bool even_fold_reading_matches_oracle(EvenFoldDenominator denominator, unsigned max_r, unsigned max_m);
/// Runs the oracle once per process and returns the unique passing reading.
EvenFoldDenominator resolved_even_fold_denominator();

/// Sigma^fold (x+n)^power by brute force in n and interpolation, assembled
/// from the pure powers Sigma^fold n^j through the binomial theorem.
RFoldClosedForm rfold_interpolated(unsigned fold, unsigned power);

/// Dispatch on parity: odd fold with odd power and even fold with even power
/// use the closed forms, power 0 uses the falling factorial with l = 0, and
/// the mixed cases are interpolated.
RFoldClosedForm rfold_power(unsigned fold, unsigned power);

/// (x+n)(x+n+k-1)_{2k-1} = 1/2 (x+n+k)_{2k} + 1/2 (x+n+k-1)_{2k} in (n, x).
bool half_split_check(unsigned k);
/// The same identity at a point.
bool half_split_check(unsigned k, const Rational& x, const Rational& n);

/// sum_{i=1}^n C(l+i-1, l) = C(l+n, l+1).
bool telescoping_check(unsigned l, long n);

struct PolynomialityReport {
  Parity kind = Parity::kOdd;
  unsigned r = 0;
  unsigned k = 0;
  Poly nu;           // n(n+2r+1) for odd, n(n+2r) for even
  Poly closed_form;  // the x = 0 closed form in n
  Poly in_nu;        // the same polynomial written in powers of nu
};

/// Odd: checks (n+j+2r)_{2j+2r} = prod_{i=1}^{j+r} [nu - (j+2r-i+1)(j-i)] for
/// j = 1..k, then writes Sigma^{2r+1} n^{2k-1} as a polynomial in nu.
/// Even: checks (n+r)(n+j+2r-1)_{2j+2r-1} = prod_{i=1}^{j+r} [nu + (j+2r-i)(i-j)]
/// and writes Sigma^{2r} n^{2k} in nu. Throws IdentityViolation on any
/// mismatch or nonzero remainder.
PolynomialityReport polynomiality_rewrite(Parity kind, unsigned r, unsigned k);

}  // namespace psum
