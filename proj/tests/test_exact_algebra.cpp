#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "psum/emit.hpp"
#include "psum/polynomial.hpp"
#include "psum/rational.hpp"

using namespace psum;

namespace {

Poly random_poly(std::mt19937_64& rng, const std::string& var, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  std::vector<Rational> cs(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& c : cs) c = Rational(num(rng), den(rng));
  return Poly(var, std::move(cs));
}

BiPoly random_bipoly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 3);
  std::vector<Poly> cs(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& c : cs) c = random_poly(rng, "x", 3);
  return BiPoly("n", std::move(cs));
}

}  // namespace

TEST_CASE("rational normalisation") {
  const Rational a(6, -4);
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(Rational(0, 5).denominator() == 1);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("a/3"), ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK(Rational::parse("123456789012345678901234567890/3").to_string() == "41152263004115226300411522630");
}

TEST_CASE("poly_arith examples") {
  const Poly x = Poly::identity("x");
  CHECK((x + Rational(1)) * (x - Rational(1)) == Poly("x", {-1, 0, 1}));
  const Poly p("x", {Rational(1, 3), 2, Rational(-5, 2)});
  CHECK(p + Poly("x") == p);
  CHECK(p + Poly() == p);
  // (x^2 + x)/2 doubled is the lambda^1 coefficient of S_3 times 2.
  const Poly half("x", {0, Rational(1, 2), Rational(1, 2)});
  CHECK(half * Rational(2) == Poly("x", {0, 1, 1}));
}

TEST_CASE("variable mismatch is a typed error") {
  const Poly x = Poly::identity("x");
  const Poly n = Poly::identity("n");
  CHECK_THROWS_AS(x + n, VariableMismatch);
  CHECK_THROWS_AS(x * n, VariableMismatch);
  // Constants mix with any variable.
  CHECK((x + Poly::constant(Rational(3), "n")) == Poly("x", {3, 1}));
}

TEST_CASE("canonical zero is the empty coefficient list") {
  const Poly p("x", {0, 0, 0});
  CHECK(p.is_zero());
  CHECK(p.degree() == -1);
  CHECK(p.coeffs().empty());
  const Poly x = Poly::identity("x");
  CHECK((x - x).coeffs().empty());
}

TEST_CASE("poly_compose") {
  const Poly v = Poly::identity("v");
  const Poly n = Poly::identity("n");
  const Poly tri = n * (n + Rational(1));
  CHECK(compose(v * v, tri) == Poly("n", {0, 0, 1, 2, 1}));
  CHECK(compose(v, tri) == tri);
  // lambda^2/4 with lambda = n(n+1) at n = 2 is 1^3 + 2^3.
  const Poly lam_sq = Poly::monomial("lambda", Rational(1, 4), 2);
  CHECK(compose(lam_sq, tri)(Rational(2)) == Rational(9));
}

TEST_CASE("poly_eval") {
  const Poly b2("x", {Rational(1, 6), -1, 1});
  CHECK(b2(Rational(0)) == Rational(1, 6));
  const Poly b3("x", {0, Rational(1, 2), Rational(-3, 2), 1});
  CHECK(b3(Rational(1, 2)) == Rational(0));

  const BiPoly lam = BiPoly::identity("n") * (BiPoly::identity("n") + (Poly("x", {1, 2})));
  CHECK(evaluate(lam, {{"n", Rational(3)}, {"x", Rational(1, 2)}}) == Rational(15));
  CHECK(evaluate(lam, {{"n", Rational(0)}, {"x", Rational(0)}}) == Rational(0));
  CHECK_THROWS_AS(evaluate(lam, {{"n", Rational(3)}}), UnboundVariable);
  CHECK(evaluate(Poly::constant(Rational(7), "x"), {}) == Rational(7));
}

TEST_CASE("falling_factorial and binomial_poly") {
  const Poly x = Poly::identity("x");
  CHECK(falling_factorial(x, 0) == Poly::constant(Rational(1)));
  CHECK(falling_factorial(x, 2) == Poly("x", {0, -1, 1}));
  CHECK(falling_factorial(x + Rational(1), 3)(Rational(2)) == Rational(6));

  const Poly n = Poly::identity("n");
  CHECK(binomial_poly(n, 0) == Poly::constant(Rational(1)));
  CHECK(binomial_poly(n - Rational(1), 0) == Poly::constant(Rational(1)));
  CHECK(binomial_poly(n + Rational(1), 2)(Rational(3)) == Rational(6));

  for (unsigned l = 0; l <= 20; ++l) {
    CHECK(falling_factorial(x, l) * (x - Rational(static_cast<long>(l))) == falling_factorial(x, l + 1));
  }
  for (unsigned k = 0; k <= 12; ++k) {
    const Poly b = binomial_poly(n, k);
    for (long big_n = k; big_n <= 30; ++big_n) {
      CHECK(b(Rational(big_n)) == Rational(binomial(big_n, static_cast<long>(k))));
    }
  }
}

TEST_CASE("poly_interpolate") {
  using Pt = std::pair<Rational, Rational>;
  const std::vector<Pt> flat{{0, 1}, {1, 1}};
  CHECK(interpolate(flat, "v") == Poly::constant(Rational(1)));
  const std::vector<Pt> sq{{0, 0}, {1, 1}, {2, 4}};
  CHECK(interpolate(sq, "v") == Poly("v", {0, 0, 1}));

  // Two-fold sums of i by explicit nested loops.
  std::vector<Pt> pts;
  for (long big_n = 1; big_n <= 4; ++big_n) {
    long total = 0;
    for (long j = 1; j <= big_n; ++j) {
      for (long i = 1; i <= j; ++i) total += i;
    }
    pts.emplace_back(big_n, total);
  }
  CHECK(pts[0].second == Rational(1));
  CHECK(pts[3].second == Rational(20));
  const Poly n = Poly::identity("n");
  CHECK(interpolate(pts, "n") == n * (n + Rational(1)) * (n + Rational(2)) * Rational(1, 6));

  const std::vector<Pt> dup{{1, 2}, {1, 3}};
  CHECK_THROWS_AS(interpolate(dup, "v"), DuplicateAbscissa);
}

TEST_CASE("property: ring axioms and interpolation round trip") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly a = random_poly(rng, "x", 6);
    const Poly b = random_poly(rng, "x", 6);
    const Poly c = random_poly(rng, "x", 6);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());

    const BiPoly p = random_bipoly(rng);
    const BiPoly q = random_bipoly(rng);
    const BiPoly r = random_bipoly(rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);

    std::vector<std::pair<Rational, Rational>> pts;
    for (long i = 0; i <= a.degree() + 2; ++i) pts.emplace_back(Rational(i * 3 - 4, 2), a(Rational(i * 3 - 4, 2)));
    const Poly fit = interpolate(pts, "x");
    for (const auto& [px, py] : pts) CHECK(fit(px) == py);
    CHECK(fit == a);
  }
}

TEST_CASE("divmod and quadratic basis") {
  const Poly n = Poly::identity("n");
  const Poly nu = n * (n + Rational(2));
  const Poly target = compose(Poly("v", {Rational(1, 3), 0, 5, -1}), nu);
  const auto basis = to_quadratic_basis(target, nu);
  CHECK(basis.residual.is_zero());
  CHECK(basis.in_nu == Poly("nu", {Rational(1, 3), 0, 5, -1}));
  const auto bad = to_quadratic_basis(target + n, nu);
  CHECK_FALSE(bad.residual.is_zero());

  const auto [q, r] = divmod(Poly("n", {-1, 0, 0, 1}), n - Rational(1));
  CHECK(q == Poly("n", {1, 1, 1}));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(divmod(n, Poly("n")), DivisionByZero);
}

TEST_CASE("json and latex emission") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const BiPoly p = random_bipoly(rng);
    CHECK(bipoly_from_json(Json::parse(to_json(p).dump())) == p);
    const Poly a = random_poly(rng, "x", 5);
    CHECK(poly_from_json(Json::parse(to_json(a).dump())) == a);
  }
  const Json j = to_json(Rational(-691, 2730));
  CHECK(j["num"] == "-691");
  CHECK(j["den"] == "2730");

  const BiPoly s3("lambda", {Poly(), Poly("x", {0, Rational(1, 2), Rational(1, 2)}), Poly::constant(Rational(1, 4))});
  CHECK(render(s3, Format::kLatex) == "\\frac{1}{4}\\lambda^{2} + \\left(\\frac{1}{2}x^{2} + \\frac{1}{2}x\\right)\\lambda");
  CHECK(render(s3, Format::kText) == "1/4*lambda^2 + (1/2*x^2 + 1/2*x)*lambda");
  CHECK(render(Poly("x", {Rational(1, 6), -1, 1}), Format::kText) == "x^2 - x + 1/6");
}
