#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "psum/errors.hpp"
#include "psum/polynomial.hpp"
#include "psum/rational.hpp"

namespace psum {

/// Order of a series with no truncation (a polynomial viewed as a series).
inline constexpr std::size_t kExactOrder = std::numeric_limits<std::size_t>::max();

template <class R>
class TruncatedSeries;

/// Formal power series sum_i c_i v^i known modulo v^order. Coefficients are
/// Rational, Polynomial, or a nested TruncatedSeries. Binary operations
/// return the smaller of the two orders; coefficients at or beyond the order
/// are never stored and reading them throws TruncationError.
template <class R>
class TruncatedSeries {
 public:
  using coeff_type = R;

  TruncatedSeries() = default;
  TruncatedSeries(std::string variable, std::size_t order, std::vector<R> coeffs = {})
      : var_(std::move(variable)), order_(order), coeffs_(std::move(coeffs)) {
    normalize();
  }

  static TruncatedSeries constant(R c, std::string variable = {}) {
    return TruncatedSeries(std::move(variable), kExactOrder, std::vector<R>{std::move(c)});
  }

  const std::string& variable() const noexcept { return var_; }
  std::size_t order() const noexcept { return order_; }
  std::span<const R> coeffs() const noexcept { return coeffs_; }

  /// Zero up to the known order.
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  R coeff(std::size_t i) const {
    if (i >= order_) {
      throw TruncationError("coefficient " + std::to_string(i) + " of " + var_ + " is beyond order " +
                            std::to_string(order_));
    }
    return i < coeffs_.size() ? coeffs_[i] : R{};
  }

  /// Index of the first nonzero coefficient; the order when none is known.
  std::size_t valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!coeffs_[i].is_zero()) return i;
    }
    return order_;
  }

  TruncatedSeries truncated(std::size_t order) const {
    TruncatedSeries out = *this;
    out.order_ = std::min(order_, order);
    out.normalize();
    return out;
  }

  /// Divides by v^k; requires valuation >= k.
  TruncatedSeries shifted_down(std::size_t k) const {
    if (valuation() < k) {
      throw ValuationError("cannot divide by " + var_ + "^" + std::to_string(k), valuation());
    }
    std::vector<R> cs;
    if (coeffs_.size() > k) cs.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
    return TruncatedSeries(var_, order_ == kExactOrder ? kExactOrder : order_ - k, std::move(cs));
  }

  /// Multiplies by v^k.
  TruncatedSeries shifted_up(std::size_t k) const {
    std::vector<R> cs(k);
    cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
    return TruncatedSeries(var_, order_ == kExactOrder ? kExactOrder : order_ + k, std::move(cs));
  }

  TruncatedSeries operator-() const {
    TruncatedSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return combine(a, b, [](const R& x, const R& y) { return x + y; });
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return combine(a, b, [](const R& x, const R& y) { return x - y; });
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return convolve(a, b);
  }

  /// Series with rational coefficients acting on a series over R.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries<Rational>& b)
    requires(!std::same_as<R, Rational>)
  {
    return convolve(a, b);
  }

  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) {
    for (auto& c : a.coeffs_) c = c * s;
    a.normalize();
    return a;
  }

  friend TruncatedSeries operator*(TruncatedSeries a, const R& s)
    requires(!std::same_as<R, Rational>)
  {
    for (auto& c : a.coeffs_) c = c * s;
    a.normalize();
    return a;
  }

  template <class C>
  friend TruncatedSeries operator+(TruncatedSeries a, const C& c)
    requires(std::same_as<C, Rational> || std::same_as<C, R>)
  {
    if (a.order_ == 0) return a;
    if (a.coeffs_.empty()) a.coeffs_.resize(1);
    a.coeffs_[0] = a.coeffs_[0] + c;
    a.normalize();
    return a;
  }

  /// Same order, same coefficients (and the same variable unless constant).
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order_ != b.order_ || a.coeffs_ != b.coeffs_) return false;
    return a.is_constant() || a.var_ == b.var_;
  }

  /// Equality of all coefficients below min(order(a), order(b)).
  friend bool agree(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order_, b.order_);
    const std::size_t stored = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < std::min(n, stored); ++i) {
      if (!(a.coeff(i) == b.coeff(i))) return false;
    }
    return true;
  }

  std::string merged_variable(const TruncatedSeries& o) const {
    if (!is_constant() && !o.is_constant()) {
      if (var_ != o.var_) throw VariableMismatch(var_, o.var_);
      return var_;
    }
    if (!is_constant()) return var_;
    if (!o.is_constant()) return o.var_;
    return var_.empty() ? o.var_ : var_;
  }

 private:
  template <class Op>
  static TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b, Op op) {
    const std::size_t order = std::min(a.order_, b.order_);
    const std::size_t len = std::min(order, std::max(a.coeffs_.size(), b.coeffs_.size()));
    std::vector<R> cs(len);
    for (std::size_t i = 0; i < len; ++i) {
      cs[i] = op(i < a.coeffs_.size() ? a.coeffs_[i] : R{}, i < b.coeffs_.size() ? b.coeffs_[i] : R{});
    }
    return TruncatedSeries(a.merged_variable(b), order, std::move(cs));
  }

  template <class S>
  static TruncatedSeries convolve(const TruncatedSeries& a, const TruncatedSeries<S>& b) {
    std::string var = a.var_;
    if (!a.is_constant() && !b.is_constant() && a.var_ != b.variable()) throw VariableMismatch(a.var_, b.variable());
    if (a.is_constant()) var = b.variable().empty() ? a.var_ : b.variable();
    const std::size_t order = std::min(a.order_, b.order());
    const auto bc = b.coeffs();
    if (a.coeffs_.empty() || bc.empty()) return TruncatedSeries(var, order);
    const std::size_t len = std::min(order, a.coeffs_.size() + bc.size() - 1);
    std::vector<R> cs(len);
    for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < bc.size() && i + j < len; ++j) {
        if (bc[j].is_zero()) continue;
        cs[i + j] = cs[i + j] + a.coeffs_[i] * bc[j];
      }
    }
    return TruncatedSeries(var, order, std::move(cs));
  }

  void normalize() {
    if (coeffs_.size() > order_) coeffs_.resize(order_);
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::string var_;
  std::size_t order_ = kExactOrder;
  std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const TruncatedSeries<R>& s) {
  return s.is_zero();
}

/// Multiplicative inverse of a ring element that is a unit.
inline Rational ring_inverse(const Rational& r) {
  if (r.is_zero()) throw ValuationError("reciprocal needs a nonzero constant term", 0);
  return Rational(1) / r;
}

template <class R>
Polynomial<R> ring_inverse(const Polynomial<R>& p) {
  if (p.degree() != 0) throw ValuationError("reciprocal needs a unit constant term", 0);
  return Polynomial<R>::constant(ring_inverse(p.coeff(0)), p.variable());
}

template <class R>
TruncatedSeries<R> reciprocal(const TruncatedSeries<R>& a);

template <class R>
TruncatedSeries<R> ring_inverse(const TruncatedSeries<R>& s) {
  return reciprocal(s);
}

/// 1/A modulo v^order(A). Throws ValuationError (with the valuation) when the
/// constant term is zero, TruncationError when A has no finite order.
template <class R>
TruncatedSeries<R> reciprocal(const TruncatedSeries<R>& a) {
  if (a.order() == kExactOrder) throw TruncationError("reciprocal of an untruncated series needs an order");
  if (a.order() == 0) return a;
  if (a.coeff(0).is_zero()) throw ValuationError("reciprocal needs a nonzero constant term", a.valuation());
  const R inv = ring_inverse(a.coeff(0));
  const std::size_t order = a.order();
  const auto ac = a.coeffs();
  std::vector<R> out(order);
  out[0] = inv;
  for (std::size_t n = 1; n < order; ++n) {
    R acc{};
    for (std::size_t i = 1; i <= n && i < ac.size(); ++i) acc = acc + ac[i] * out[n - i];
    out[n] = -(acc * inv);
  }
  return TruncatedSeries<R>(a.variable(), order, std::move(out));
}

enum class RootSign { kPositive, kNegative };

/// Square root of a series.
///
/// Constant term 1: the root with constant term +1 (kPositive) or -1.
/// Zero constant term (rational coefficients only): the valuation must be even
/// and the leading coefficient a rational square; the sign picks the sign of
/// the leading coefficient of the root. The result order is order(A) - v/2
/// for valuation v. Any other constant term throws ValuationError.
template <class R>
TruncatedSeries<R> sqrt(const TruncatedSeries<R>& a, RootSign sign = RootSign::kPositive) {
  if (a.order() == kExactOrder) throw TruncationError("sqrt of an untruncated series needs an order");
  const R head = a.order() == 0 ? R{} : a.coeff(0);
  if (head.is_zero()) {
    const std::size_t v = a.valuation();
    if constexpr (std::same_as<R, Rational>) {
      if (v == a.order()) return TruncatedSeries<R>(a.variable(), (a.order() + 1) / 2);
      if (v % 2 != 0) throw ValuationError("sqrt needs an even valuation", v);
      Rational root;
      if (!rational_sqrt(a.coeff(v), root)) throw ValuationError("sqrt needs a square leading coefficient", v);
      const TruncatedSeries<R> unit = a.shifted_down(v) * (Rational(1) / a.coeff(v));
      return (sqrt(unit, sign) * root).shifted_up(v / 2);
    } else {
      throw ValuationError("sqrt needs constant term 1", v);
    }
  }
  if (!(head == unit_element<R>())) throw ValuationError("sqrt needs constant term 1", 0);
  const std::size_t order = a.order();
  const auto ac = a.coeffs();
  const Rational s0 = sign == RootSign::kPositive ? Rational(1) : Rational(-1);
  std::vector<R> out(order);
  out[0] = unit_element<R>() * s0;
  const Rational inv_two_s0 = Rational(1) / (Rational(2) * s0);
  for (std::size_t n = 1; n < order; ++n) {
    R acc = n < ac.size() ? ac[n] : R{};
    for (std::size_t i = 1; i < n; ++i) acc = acc - out[i] * out[n - i];
    out[n] = acc * inv_two_s0;
  }
  return TruncatedSeries<R>(a.variable(), order, std::move(out));
}

/// sum_n values[n] v^n / n! modulo v^order.
TruncatedSeries<Rational> egf(const std::string& variable, std::span<const Rational> values, std::size_t order);

/// Converts a polynomial to a series truncated at `order`.
template <class R>
TruncatedSeries<R> to_series(const Polynomial<R>& p, std::size_t order) {
  return TruncatedSeries<R>(p.variable(), order, std::vector<R>(p.coeffs().begin(), p.coeffs().end()));
}

}  // namespace psum
