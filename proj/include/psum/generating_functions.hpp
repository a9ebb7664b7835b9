#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "psum/emit.hpp"
#include "psum/faulhaber.hpp"
#include "psum/polynomial.hpp"
#include "psum/series.hpp"

namespace psum {

using TSeries = TruncatedSeries<Poly>;     // in t, coefficients polynomials in x
using YSeries = TruncatedSeries<TSeries>;  // in y, coefficients series in t

struct SeriesOrders {
  std::size_t y = 13;
  std::size_t t = 7;
};

/// sum_j y^{2j} u^j / (2j)! modulo y^y_order, with u^j truncated at t_order.
/// u has outer variable t and inner variable x.
YSeries cosh_sqrt_series(const BiPoly& u, std::size_t y_order, std::size_t t_order);

struct GfEntry {
  unsigned m = 0;
  unsigned k = 0;
  Poly expected;
  Poly extracted;
  bool pass = false;
};

struct GfReport {
  std::string which;
  SeriesOrders orders;
  std::vector<GfEntry> entries;
  bool all_pass() const;
};

/// Expands (cosh(y sqrt(c^2 + t)) - cosh(y c)) / (2 sinh(y/2)), c = x + 1/2,
/// and compares the coefficient of t^k y^{2m+1}/(2m+1)! with F_k^(m+1)(x)
/// for 0 <= m < max_m, 1 <= k <= max_k.
///
/// Pipeline: the numerator must have y-valuation >= 2; it is divided by y,
/// then multiplied by the reciprocal of the unit series sinh(y/2)/(y/2)
/// (so 2 sinh(y/2) = y * sinh(y/2)/(y/2)). Throws TruncationError when the
/// orders cannot reach the requested grid.
GfReport gf_faulhaber_check(unsigned max_m, unsigned max_k, SeriesOrders orders = {});

/// Expands cosh(y sqrt(c^2 + t)) / (2 cosh(y/2)) and compares the coefficient
/// of t^k y^{2m}/(2m)! with G_k^(m)(x) for 0 <= m < max_m, 0 <= k <= max_k.
/// The t^0 entry is the average over the parity of n, E_{2m}(x+1)/2.
GfReport gf_alternating_check(unsigned max_m, unsigned max_k, SeriesOrders orders = {});
GfReport gf_alternating_check(unsigned max_m, unsigned max_k, AlternatingExponent exponent,
                              SeriesOrders orders = {});

/// A(t), B(t): exponential generating functions of E_n(1) and E_n(1/2).
struct EulerSqrtReport {
  std::size_t order = 0;
  bool quadratic_relation = false;        // A^2 = 2A - B^2
  bool square_complement = false;         // (1 - A)^2 = 1 - B^2
  bool negative_branch_is_a = false;      // A = 1 - sqrt(1 - B^2) on the root with constant -1
  bool principal_is_a_minus_one = false;  // sqrt(1 - B^2) with constant +1 equals A - 1
  bool root_squares_back = false;
  bool all_pass() const;
};

EulerSqrtReport euler_sqrt_check(std::size_t order = 16);

Json to_json(const GfReport& report);
Json to_json(const EulerSqrtReport& report);
std::string render_text(const GfReport& report);
std::string render_text(const EulerSqrtReport& report);

}  // namespace psum
