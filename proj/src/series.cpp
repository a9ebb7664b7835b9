#include "psum/series.hpp"

namespace psum {

TruncatedSeries<Rational> egf(const std::string& variable, std::span<const Rational> values, std::size_t order) {
  std::vector<Rational> cs;
  Rational inv_fact(1);
  for (std::size_t n = 0; n < values.size() && n < order; ++n) {
    if (n > 0) inv_fact = inv_fact / Rational(static_cast<long>(n));
    cs.push_back(values[n] * inv_fact);
  }
  return TruncatedSeries<Rational>(variable, order, std::move(cs));
}

}  // namespace psum
