#include "psum/generating_functions.hpp"

#include <sstream>

#include "psum/special_sequences.hpp"

namespace psum {

namespace {

Rational fact(unsigned n) { return Rational(factorial(n)); }

// c^2 + t with c = x + 1/2, as a polynomial in t over x.
BiPoly shifted_square_plus_t() {
  const Poly c = Poly::identity("x") + Rational(1, 2);
  return BiPoly("t", {c * c, Poly::constant(Rational(1))});
}

BiPoly shifted_square() {
  const Poly c = Poly::identity("x") + Rational(1, 2);
  return BiPoly::constant(c * c, "t");
}

// sum_j (y/2)^{2j} / (2j+1)!, the unit series sinh(y/2) / (y/2).
TruncatedSeries<Rational> sinh_half_over_half(std::size_t order) {
  std::vector<Rational> cs(order);
  for (std::size_t j = 0; 2 * j < order; ++j) {
    cs[2 * j] = Rational(1) / (pow(Rational(4), static_cast<long>(j)) * fact(static_cast<unsigned>(2 * j + 1)));
  }
  return TruncatedSeries<Rational>("y", order, std::move(cs));
}

// 2 cosh(y/2) = sum_j 2 (y/2)^{2j} / (2j)!.
TruncatedSeries<Rational> two_cosh_half(std::size_t order) {
  std::vector<Rational> cs(order);
  for (std::size_t j = 0; 2 * j < order; ++j) {
    cs[2 * j] = Rational(2) / (pow(Rational(4), static_cast<long>(j)) * fact(static_cast<unsigned>(2 * j)));
  }
  return TruncatedSeries<Rational>("y", order, std::move(cs));
}

void require_orders(const SeriesOrders& orders, std::size_t y_needed, std::size_t t_needed) {
  if (orders.y < y_needed || orders.t < t_needed) {
    throw TruncationError("series orders (y " + std::to_string(orders.y) + ", t " + std::to_string(orders.t) +
                          ") too small; need y >= " + std::to_string(y_needed) + ", t >= " +
                          std::to_string(t_needed));
  }
}

Poly t_coeff(const TSeries& s, unsigned k) { return s.coeff(k); }

}  // namespace

YSeries cosh_sqrt_series(const BiPoly& u, std::size_t y_order, std::size_t t_order) {
  const TSeries base = to_series(u, t_order);
  std::vector<TSeries> cs(y_order);
  TSeries power = TSeries::constant(Poly::constant(Rational(1)), "t").truncated(t_order);
  for (std::size_t j = 0; 2 * j < y_order; ++j) {
    if (j > 0) power = power * base;
    cs[2 * j] = power * (Rational(1) / fact(static_cast<unsigned>(2 * j)));
  }
  return YSeries("y", y_order, std::move(cs));
}

bool GfReport::all_pass() const {
  for (const auto& e : entries) {
    if (!e.pass) return false;
  }
  return true;
}

GfReport gf_faulhaber_check(unsigned max_m, unsigned max_k, SeriesOrders orders) {
  // y^{2m+1} for m < max_m lives in a series of order y - 1 after the shift.
  require_orders(orders, 2 * static_cast<std::size_t>(max_m) + 1, max_k + 1);
  GfReport report;
  report.which = "faulhaber";
  report.orders = orders;

  const YSeries numerator = cosh_sqrt_series(shifted_square_plus_t(), orders.y, orders.t) -
                            cosh_sqrt_series(shifted_square(), orders.y, orders.t);
  if (numerator.valuation() < 2) {
    throw ValuationError("faulhaber numerator must vanish to second order in y", numerator.valuation());
  }
  const YSeries over_y = numerator.shifted_down(1);
  const YSeries rhs = over_y * reciprocal(sinh_half_over_half(over_y.order()));

  for (unsigned m = 0; m < max_m; ++m) {
    const TSeries coeff = rhs.coeff(2 * m + 1) * fact(2 * m + 1);
    const LambdaExpansion f = faulhaber_coeffs(m + 1);
    for (unsigned k = 1; k <= max_k; ++k) {
      GfEntry e;
      e.m = m;
      e.k = k;
      e.expected = k <= m + 1 ? f.coeffs[k] : Poly("x");
      e.extracted = t_coeff(coeff, k);
      e.pass = e.expected == e.extracted;
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

GfReport gf_alternating_check(unsigned max_m, unsigned max_k, SeriesOrders orders) {
  return gf_alternating_check(max_m, max_k, resolved_alternating_exponent(), orders);
}

GfReport gf_alternating_check(unsigned max_m, unsigned max_k, AlternatingExponent exponent, SeriesOrders orders) {
  require_orders(orders, 2 * static_cast<std::size_t>(max_m) - (max_m > 0 ? 1 : 0), max_k + 1);
  GfReport report;
  report.which = "alternating";
  report.orders = orders;

  const YSeries numerator = cosh_sqrt_series(shifted_square_plus_t(), orders.y, orders.t);
  const YSeries rhs = numerator * reciprocal(two_cosh_half(orders.y));
  const Poly x1 = Poly::identity("x") + Rational(1);

  for (unsigned m = 0; m < max_m; ++m) {
    const TSeries coeff = rhs.coeff(2 * m) * fact(2 * m);
    for (unsigned k = 0; k <= max_k; ++k) {
      GfEntry e;
      e.m = m;
      e.k = k;
      if (k == 0) {
        e.expected = (compose(euler_poly(2 * m), x1) * Rational(1, 2)).with_variable("x");
      } else if (k <= m) {
        e.expected = alternating_coeffs(m, exponent).coeffs[k];
      } else {
        e.expected = Poly("x");
      }
      e.extracted = t_coeff(coeff, k);
      e.pass = e.expected == e.extracted;
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

bool EulerSqrtReport::all_pass() const {
  return quadratic_relation && square_complement && negative_branch_is_a && principal_is_a_minus_one &&
         root_squares_back;
}

EulerSqrtReport euler_sqrt_check(std::size_t order) {
  // 1 - B^2 has valuation 2, so its square root loses one order; build the
  // inputs one order higher.
  const std::size_t input_order = order + 1;
  std::vector<Rational> at_one;
  std::vector<Rational> at_half;
  for (std::size_t n = 0; n < input_order; ++n) {
    const Poly e = euler_poly(n);
    at_one.push_back(e(Rational(1)));
    at_half.push_back(e(Rational(1, 2)));
  }
  const auto a = egf("t", at_one, input_order);
  const auto b = egf("t", at_half, input_order);
  const auto one = TruncatedSeries<Rational>::constant(Rational(1), "t");
  const auto complement = one - b * b;

  EulerSqrtReport report;
  report.order = order;
  report.quadratic_relation = (a * a).truncated(order) == (a * Rational(2) - b * b).truncated(order);
  report.square_complement = ((one - a) * (one - a)).truncated(order) == complement.truncated(order);

  const auto principal = sqrt(complement, RootSign::kPositive);
  const auto negative = sqrt(complement, RootSign::kNegative);
  report.negative_branch_is_a = (one - negative).truncated(order) == a.truncated(order);
  report.principal_is_a_minus_one = principal.truncated(order) == (a - one).truncated(order);
  report.root_squares_back = (principal * principal).truncated(order) == complement.truncated(order);
  return report;
}

Json to_json(const GfReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back(Json{{"m", e.m},
                           {"k", e.k},
                           {"pass", e.pass},
                           {"expected", to_json(e.expected)},
                           {"extracted", to_json(e.extracted)},
                           {"diff", to_json(e.extracted - e.expected)}});
  }
  return Json{{"which", report.which},
              {"y_order", report.orders.y},
              {"t_order", report.orders.t},
              {"entries", std::move(entries)},
              {"all_pass", report.all_pass()}};
}

Json to_json(const EulerSqrtReport& report) {
  return Json{{"which", "euler-sqrt"},
              {"order", report.order},
              {"quadratic_relation", report.quadratic_relation},
              {"square_complement", report.square_complement},
              {"negative_branch_is_a", report.negative_branch_is_a},
              {"principal_is_a_minus_one", report.principal_is_a_minus_one},
              {"root_squares_back", report.root_squares_back},
              {"all_pass", report.all_pass()}};
}

std::string render_text(const GfReport& report) {
  std::ostringstream out;
  for (const auto& e : report.entries) {
    out << (e.pass ? "ok   " : "FAIL ") << report.which << " m=" << e.m << " k=" << e.k << "  "
        << render(e.extracted, Format::kText);
    if (!e.pass) out << "  expected " << render(e.expected, Format::kText);
    out << '\n';
  }
  out << (report.all_pass() ? "all pass" : "FAILURES") << " (" << report.entries.size() << " entries)\n";
  return out.str();
}

std::string render_text(const EulerSqrtReport& report) {
  std::ostringstream out;
  auto line = [&](const char* name, bool ok) { out << (ok ? "ok   " : "FAIL ") << name << '\n'; };
  line("A^2 = 2A - B^2", report.quadratic_relation);
  line("(1 - A)^2 = 1 - B^2", report.square_complement);
  line("A = 1 - sqrt(1 - B^2), root with constant -1", report.negative_branch_is_a);
  line("sqrt(1 - B^2), root with constant +1, = A - 1", report.principal_is_a_minus_one);
  line("sqrt(1 - B^2)^2 = 1 - B^2", report.root_squares_back);
  out << (report.all_pass() ? "all pass" : "FAILURES") << " (order " << report.order << ")\n";
  return out.str();
}

}  // namespace psum
