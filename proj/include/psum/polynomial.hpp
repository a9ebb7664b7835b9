#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "psum/errors.hpp"
#include "psum/rational.hpp"

namespace psum {

/// Variable bindings for full evaluation, e.g. {{"n", 4}, {"x", Rational(1, 2)}}.
using Bindings = std::map<std::string, Rational, std::less<>>;

template <class R>
class Polynomial;

template <class T>
struct is_polynomial : std::false_type {};
template <class R>
struct is_polynomial<Polynomial<R>> : std::true_type {};

/// Multiplicative identity of a coefficient ring (Rational, Polynomial, series).
template <class R>
R unit_element() {
  if constexpr (std::same_as<R, Rational>) {
    return Rational(1);
  } else {
    return R::constant(unit_element<typename R::coeff_type>());
  }
}

/// Dense univariate polynomial with a variable tag. Coefficients live in R,
/// which is Rational or another Polynomial (two-level nesting covers every
/// bivariate object in this library: outer n or lambda, inner x).
///
/// Canonical form: no trailing zero coefficients, so the zero polynomial has an
/// empty coefficient list. Constants (degree <= 0) are tag-agnostic: they mix
/// with any variable. Two non-constant operands with different tags raise
/// VariableMismatch.
template <class R>
class Polynomial {
 public:
  using coeff_type = R;

  Polynomial() = default;
  explicit Polynomial(std::string variable) : var_(std::move(variable)) {}
  Polynomial(std::string variable, std::vector<R> coeffs)
      : var_(std::move(variable)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial constant(R c, std::string variable = {}) {
    return Polynomial(std::move(variable), std::vector<R>{std::move(c)});
  }

  static Polynomial monomial(std::string variable, R c, std::size_t degree) {
    std::vector<R> coeffs(degree + 1);
    coeffs[degree] = std::move(c);
    return Polynomial(std::move(variable), std::move(coeffs));
  }

  /// The polynomial `v` itself.
  static Polynomial identity(std::string variable) {
    return monomial(std::move(variable), unit_element<R>(), 1);
  }

  const std::string& variable() const noexcept { return var_; }
  std::span<const R> coeffs() const noexcept { return coeffs_; }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R{}; }
  const R& leading() const { return coeffs_.back(); }

  Polynomial with_variable(std::string variable) const {
    Polynomial out = *this;
    out.var_ = std::move(variable);
    return out;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    var_ = merged_variable(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    var_ = merged_variable(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.merged_variable(b));
    if (a.is_zero() || b.is_zero()) return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, R{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    out.trim();
    return out;
  }

  /// Coefficient-wise scaling by a rational.
  friend Polynomial operator*(Polynomial p, const Rational& s) {
    for (auto& c : p.coeffs_) c = c * s;
    p.trim();
    return p;
  }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return std::move(p) * s; }

  /// Coefficient-wise scaling by an inner ring element (e.g. a polynomial in x
  /// multiplying a polynomial in n whose coefficients are polynomials in x).
  friend Polynomial operator*(Polynomial p, const R& s)
    requires(!std::same_as<R, Rational>)
  {
    for (auto& c : p.coeffs_) c = c * s;
    p.trim();
    return p;
  }

  /// Adds `c` to the constant term; C is Rational or R.
  template <class C>
  Polynomial& add_constant(const C& c) {
    if (coeffs_.empty()) coeffs_.resize(1);
    coeffs_[0] = coeffs_[0] + c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Rational& c) { return p.add_constant(c); }
  friend Polynomial operator-(Polynomial p, const Rational& c) { return p.add_constant(-c); }
  friend Polynomial operator+(Polynomial p, const R& c)
    requires(!std::same_as<R, Rational>)
  {
    return p.add_constant(c);
  }
  friend Polynomial operator-(Polynomial p, const R& c)
    requires(!std::same_as<R, Rational>)
  {
    return p.add_constant(-c);
  }

  /// Horner evaluation of the outer variable; returns a coefficient-ring value.
  R operator()(const Rational& v) const {
    R acc{};
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial(var_);
    std::vector<R> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    }
    return Polynomial(var_, std::move(out));
  }

  template <class F>
  auto map_coeffs(F&& f) const -> Polynomial<std::decay_t<std::invoke_result_t<F, const R&>>> {
    using T = std::decay_t<std::invoke_result_t<F, const R&>>;
    std::vector<T> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return Polynomial<T>(var_, std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_ != b.coeffs_) return false;
    return a.is_constant() || a.var_ == b.var_;
  }

  /// Tag of the result of a binary operation with `o`.
  std::string merged_variable(const Polynomial& o) const {
    if (!is_constant() && !o.is_constant()) {
      if (var_ != o.var_) throw VariableMismatch(var_, o.var_);
      return var_;
    }
    if (!is_constant()) return var_;
    if (!o.is_constant()) return o.var_;
    return var_.empty() ? o.var_ : var_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::string var_;
  std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const Polynomial<R>& p) {
  return p.is_zero();
}

using Poly = Polynomial<Rational>;
using BiPoly = Polynomial<Poly>;

inline Rational evaluate(const Rational& r, const Bindings&) { return r; }

/// Full evaluation; every non-constant level needs a binding.
template <class R>
Rational evaluate(const Polynomial<R>& p, const Bindings& bindings) {
  if (p.is_zero()) return Rational(0);
  if (p.degree() == 0) return evaluate(p.coeff(0), bindings);
  const auto it = bindings.find(p.variable());
  if (it == bindings.end()) throw UnboundVariable(p.variable());
  Rational acc;
  const auto cs = p.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) acc = acc * it->second + evaluate(cs[i], bindings);
  return acc;
}

template <class R>
Polynomial<R> pow(const Polynomial<R>& base, unsigned exponent) {
  Polynomial<R> out = Polynomial<R>::constant(unit_element<R>(), base.variable());
  Polynomial<R> sq = base;
  while (exponent != 0) {
    if ((exponent & 1U) != 0) out = out * sq;
    exponent >>= 1U;
    if (exponent != 0) sq = sq * sq;
  }
  return out;
}

/// p(q): substitutes q for p's variable and expands. C is Rational or S.
template <class C, class S>
Polynomial<S> compose(const Polynomial<C>& p, const Polynomial<S>& q) {
  Polynomial<S> acc(q.variable());
  const auto cs = p.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    acc = acc * q;
    acc.add_constant(cs[i]);
  }
  return acc;
}

/// Embeds a univariate rational polynomial as a bivariate one whose inner
/// coefficients are constants.
inline BiPoly lift(const Poly& p) {
  return p.map_coeffs([](const Rational& c) { return Poly::constant(c); });
}

/// Partially evaluates the inner variable of a bivariate polynomial.
inline Poly bind_inner(const BiPoly& p, const Rational& value) {
  return p.map_coeffs([&](const Poly& c) { return c(value); });
}

/// (v)_l = v(v-1)...(v-l+1); l = 0 gives 1.
template <class R>
Polynomial<R> falling_factorial(const Polynomial<R>& v, unsigned l) {
  Polynomial<R> out = Polynomial<R>::constant(unit_element<R>(), v.variable());
  for (unsigned j = 0; j < l; ++j) out = out * (v - Rational(static_cast<long>(j)));
  return out;
}

/// C(v, k) = (v)_k / k! as a polynomial in v's variables.
template <class R>
Polynomial<R> binomial_poly(const Polynomial<R>& v, unsigned k) {
  return falling_factorial(v, k) * Rational(BigInt(1), factorial(k));
}

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division over Q. Throws DivisionByZero for a zero divisor.
DivMod divmod(const Poly& a, const Poly& b);

/// Newton divided-difference interpolation through exact points.
/// Throws DuplicateAbscissa when two abscissae coincide.
Poly interpolate(std::span<const std::pair<Rational, Rational>> points, const std::string& variable);

struct QuadraticBasis {
  Poly in_nu;     // coefficients c_j of nu^j, tagged with the requested name
  Poly residual;  // sum_j (linear remainder_j) * nu^j; zero iff p is a polynomial in nu
};

/// Rewrites p(n) as sum_j c_j nu(n)^j for a quadratic nu, by repeated division.
QuadraticBasis to_quadratic_basis(const Poly& p, const Poly& nu, const std::string& nu_name = "nu");

/// True when every coefficient of the bivariate p vanishes at inner value 0,
/// i.e. p is divisible by the inner variable.
inline bool divisible_by_inner_variable(const BiPoly& p) { return bind_inner(p, Rational(0)).is_zero(); }

}  // namespace psum
