#pragma once

#include <span>
#include <string>
#include <vector>

#include "psum/emit.hpp"
#include "psum/faulhaber.hpp"
#include "psum/polynomial.hpp"
#include "psum/rational.hpp"

namespace psum {

/// sum over 1 <= i_1 <= ... <= i_r <= n of (-1)^{i_1} (i_1 + x)^m.
Rational alt_bruteforce(unsigned r, unsigned m, const Rational& x, long n);
/// The same at n = 1..count (index 0 holds n = 1).
std::vector<Rational> alt_bruteforce_table(unsigned r, unsigned m, const Rational& x, long count);

/// E^(r)_m(a_1, ..., a_r) = sum over i_1 + ... + i_r = m of the multinomial
/// times E_{i_1}(a_1) ... E_{i_r}(a_r), by repeated binomial convolution.
/// An empty argument list gives E^(0)_m = [m = 0].
Rational euler_convolution(std::span<const Rational> args, unsigned m);
/// Rational leading arguments and one polynomial last argument; the result is
/// a polynomial in the last argument's variable.
Poly euler_convolution(std::span<const Rational> args, const Poly& last, unsigned m);

/// E^(k)_m(1/2, ..., 1/2, last) with k - 1 halves.
Rational euler_convolution_halves(unsigned k, unsigned m, const Rational& last);
Poly euler_convolution_halves(unsigned k, unsigned m, const Poly& last);

/// Sign of the correction sum in the closed form of the alternating r-fold sum.
enum class AltCorrectionSign {
  kPlus,   // + sum_k C(n+r-k-1, r-k) 2^{-k} E^(k)_m(...)
  kMinus,  // - sum_k ...
};

/// (-1)^n 2^{-r} E^(r)_m(1/2, ..., 1/2, x+n+r/2+1/2)
///   +/- sum_{k=1}^r C(n+r-k-1, r-k) 2^{-k} E^(k)_m(1/2, ..., 1/2, x+(k+1)/2).
Rational alt_rfold_closed(unsigned r, unsigned m, const Rational& x, const Rational& n, AltCorrectionSign sign);
Rational alt_rfold_closed(unsigned r, unsigned m, const Rational& x, const Rational& n);
/// The closed form as a polynomial in n for n of the given parity.
Poly alt_rfold_closed_poly(unsigned r, unsigned m, const Rational& x, Parity parity, AltCorrectionSign sign);
Poly alt_rfold_closed_poly(unsigned r, unsigned m, const Rational& x, Parity parity);

bool alt_sign_matches_oracle(AltCorrectionSign sign, unsigned max_r, unsigned max_m);
AltCorrectionSign resolved_alt_correction_sign();

/// Sign inside the odd special-value recurrence.
enum class OddRecurrenceSign {
  kPrinted,  // (-1)^{j+1}
  kPlain,    // (-1)^j
};

/// E^(k)_{2m}(1/2, ..., 1/2, (k+1)/2) (even) or E^(k)_{2m+1}(1/2, ..., 1/2, (k+1)/2)
/// (odd) from the binomial recurrences in E^(2j)_{2m}(1/2, ..., 1/2) and
/// E^(2j+1)_{2m+1}(1/2, ..., 1/2, 1). Upper limits are floor(k/2); in the odd
/// case every term with 2i+1 > k carries C(k, 2i+1) = 0, so floor((k-1)/2)
/// gives the same value.
Rational special_value_recurrence(unsigned k, unsigned m, Parity parity, OddRecurrenceSign sign);
Rational special_value_recurrence(unsigned k, unsigned m, Parity parity);
/// The same quantity by direct convolution.
Rational special_value_direct(unsigned k, unsigned m, Parity parity);

bool odd_recurrence_sign_matches(OddRecurrenceSign sign, unsigned max_k, unsigned max_m);
OddRecurrenceSign resolved_odd_recurrence_sign();

/// Prefactor of F in the (2r+1)-fold sum of odd powers.
enum class OddOddPrefactor {
  kPrinted,    // n + r
  kSymmetric,  // 2n + 2r + 1
};

/// Sigma^fold (-1)^n n^power = (-1)^n f_prefactor F(nu) + g_prefactor G(nu).
struct StructureFit {
  unsigned fold = 0;
  unsigned power = 0;
  unsigned r = 0;
  unsigned m = 0;
  std::string label;  // e.g. "(2r+1,2m)"
  Poly nu;            // n(n+2r) for even folds, n(n+2r+1) for odd
  Poly f_prefactor;   // in n
  Poly g_prefactor;   // in n
  Poly f;             // in "nu"
  Poly g;             // in "nu"
  int f_degree_bound = 0;
  int g_degree_bound = 0;  // -1 means G is zero
  long window = 0;         // reconstruction checked on n = 1..window

  Rational evaluate(long n) const;
};

/// Separates the parity components of the brute-force values, divides out the
/// prefactors, and rewrites both parts in nu. Throws StructureViolation when a
/// division or basis change leaves a remainder, a degree exceeds its bound, or
/// the reconstruction disagrees with the oracle.
StructureFit structure_fit(unsigned fold, unsigned power, OddOddPrefactor prefactor);
StructureFit structure_fit(unsigned fold, unsigned power);

OddOddPrefactor resolved_odd_odd_prefactor();

Json to_json(const StructureFit& fit);

struct IdentityEntry {
  std::string name;
  Json params;
  bool pass = false;
};

struct IdentityReport {
  std::vector<IdentityEntry> entries;
  bool all_pass() const;
};

/// sum_{i=j}^{floor(n/2)} C(n,2i) C(i,j) = 2^{n-2j-1} C(n-j,j) n/(n-j).
bool binomial_even_sum_check(long j, long n);
/// sum_{k=-m}^{n} C(n-k, i) C(m+k, j) = C(m+n+1, i+j+1).
bool vandermonde_type_check(long i, long j, long n, long m);
/// (n+r)(n+2r-j-1)_{2r-2j-1} = prod_{i=1}^{r-j} [n(n+2r) + (2r-j-i)(i+j)] in n.
bool even_alt_product_check(unsigned r, unsigned j);

/// Runs the three identity families over their default ranges.
IdentityReport identity_checks();

}  // namespace psum
