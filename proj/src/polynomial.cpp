#include "psum/polynomial.hpp"

namespace psum {

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const std::string var = a.merged_variable(b);
  Poly rem = a.with_variable(var);
  const int db = b.degree();
  if (rem.degree() < db) return {Poly(var), rem};
  std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - db + 1));
  const Rational lead = b.leading();
  while (!rem.is_zero() && rem.degree() >= db) {
    const auto shift = static_cast<std::size_t>(rem.degree() - db);
    const Rational c = rem.leading() / lead;
    quot[shift] = c;
    rem -= Poly::monomial(var, c, shift) * b;
  }
  return {Poly(var, std::move(quot)), rem};
}

Poly interpolate(std::span<const std::pair<Rational, Rational>> points, const std::string& variable) {
  const std::size_t count = points.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (points[i].first == points[j].first) {
        throw DuplicateAbscissa("duplicate abscissa " + points[i].first.to_string());
      }
    }
  }
  // In-place divided-difference table: after pass k, diff[i] = f[x_{i-k}, ..., x_i].
  std::vector<Rational> diff;
  diff.reserve(count);
  for (const auto& p : points) diff.push_back(p.second);
  for (std::size_t k = 1; k < count; ++k) {
    for (std::size_t i = count - 1; i >= k; --i) {
      diff[i] = (diff[i] - diff[i - 1]) / (points[i].first - points[i - k].first);
    }
  }
  // Newton form evaluated by Horner from the innermost bracket outward.
  Poly out(variable);
  const Poly v = Poly::identity(variable);
  for (std::size_t i = count; i-- > 0;) {
    out = out * (v - points[i].first);
    out.add_constant(diff[i]);
  }
  return out.with_variable(variable);
}

QuadraticBasis to_quadratic_basis(const Poly& p, const Poly& nu, const std::string& nu_name) {
  if (nu.degree() != 2) throw Error("quadratic basis needs a degree-2 polynomial");
  std::vector<Rational> coeffs;
  Poly residual(p.variable());
  Poly nu_power = Poly::constant(Rational(1), p.variable());
  Poly rest = p;
  while (!rest.is_zero()) {
    auto [q, r] = divmod(rest, nu);
    coeffs.push_back(r.coeff(0));
    if (r.degree() >= 1) residual += Poly::monomial(p.variable(), r.coeff(1), 1) * nu_power;
    nu_power = nu_power * nu;
    rest = std::move(q);
  }
  return {Poly(nu_name, std::move(coeffs)), residual};
}

}  // namespace psum
