#pragma once

#include <vector>

#include "psum/polynomial.hpp"
#include "psum/rational.hpp"
#include "psum/special_sequences.hpp"

namespace psum {

enum class Parity { kEven, kOdd };

inline Parity parity_of(long n) { return (n % 2 == 0) ? Parity::kEven : Parity::kOdd; }

enum class ExpansionKind { kOddPowerSum, kAlternatingEvenSum };

/// sum_k coeffs[k](x) lambda^k with lambda = n(n + 2x + 1).
///
/// Odd kind: sum_{i=1}^n (x+i)^{2m-1}; coeffs[0] is zero.
/// Alternating kind: sum_{i=1}^n (-1)^{n-i} (x+i)^{2m}; the lambda^0 term
/// depends on the parity of n and is held separately (zero for even n,
/// E_{2m}(x+1) for odd n), so every stored object is a polynomial.
struct LambdaExpansion {
  unsigned m = 0;
  ExpansionKind kind = ExpansionKind::kOddPowerSum;
  std::vector<Poly> coeffs;  // index = power of lambda, polynomials in x
  Poly constant_even;
  Poly constant_odd;

  /// Outer variable "lambda", inner "x".
  BiPoly in_lambda(Parity parity = Parity::kEven) const;
  /// Expanded in (n, x) after substituting lambda = n(n + 2x + 1).
  BiPoly substituted(Parity parity = Parity::kEven) const;
  Rational evaluate(const Rational& x, long n) const;
};

/// lambda = n(n + 2x + 1): outer n, inner x.
BiPoly lambda_in_n();

/// sum_{i=1}^n (x+i)^m = (B_{m+1}(x+n+1) - B_{m+1}(x+1)) / (m+1), outer n, inner x.
BiPoly direct_power_sum_poly(unsigned m);

/// F_k^(m)(x), k = 1..m, for the odd power sum of exponent 2m-1. Throws
/// IdentityViolation if the k = 0 term fails to cancel against B_{2m}(x+1)/(2m).
LambdaExpansion faulhaber_coeffs(unsigned m);
LambdaExpansion faulhaber_coeffs(unsigned m, const BernoulliTable& bernoulli);

/// Raw Gessel-Viennot coefficients A_0^(m) .. A_{m-1}^(m) from the Bernoulli
/// number formula. They are normalised so that
///   2m * sum_{i=1}^n i^{2m-1} = sum_k A_k^(m) (n(n+1))^{m-k}.
std::vector<Rational> gessel_viennot_coeffs(unsigned m);
std::vector<Rational> gessel_viennot_coeffs(unsigned m, const BernoulliTable& bernoulli);

/// The same coefficients re-indexed as lambda powers: entry j (0..m) is the
/// coefficient of lambda^j at x = 0, i.e. A_{m-j}^(m) / (2m); entry 0 is 0.
std::vector<Rational> gessel_viennot_lambda_coeffs(unsigned m);

/// Two readings of the (x + 1/2) exponent in the alternating coefficients.
enum class AlternatingExponent {
  kLinear,   // (x + 1/2)^{i-k}
  kDoubled,  // (x + 1/2)^{2i-2k}
};

LambdaExpansion alternating_coeffs(unsigned m, AlternatingExponent exponent);
/// Uses the reading selected by the brute-force oracle.
LambdaExpansion alternating_coeffs(unsigned m);

/// True when the reading reproduces sum (-1)^{n-i} (x+i)^{2m} for m <= max_m on
/// a small (x, n) grid, both parities of n.
bool alternating_reading_matches_oracle(AlternatingExponent exponent, unsigned max_m);

/// Runs the oracle once per process and returns the unique passing reading.
AlternatingExponent resolved_alternating_exponent();

/// sum_{i=1}^n (-1)^{n-i} (x+i)^p by direct summation.
Rational alternating_power_sum_direct(unsigned power, const Rational& x, long n);

/// Arithmetic progression a + b, a + 2b, ..., a + nb.
struct ProgressionSpec {
  Rational a;
  Rational b;
};

/// mu = n a + n(n+1) b / 2 as a polynomial in n.
Poly progression_mu(const ProgressionSpec& spec);

/// sum_{i=1}^n (a + ib)^{2m-1} as a polynomial in mu. Uses x = a/b so that
/// a + ib = b(x + i), and lambda = 2 mu / b. Throws DegenerateProgression for b = 0.
Poly progression_power_sum(const ProgressionSpec& spec, unsigned m);

/// Checks (n+x)(n+x+1) = n(n+2x+1) + x(x+1) and the binomial expansion of
/// [(n+x)(n+x+1)]^i - [x(x+1)]^i in powers of n(n+2x+1), both symbolically and
/// at the given point.
bool decomposition_identity_check(const Rational& x, long n, unsigned i);

}  // namespace psum
