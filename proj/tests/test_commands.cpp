#include <string>

#include "doctest.h"
#include "psum/alternating.hpp"
#include "psum/commands.hpp"
#include "psum/errors.hpp"
#include "psum/faulhaber.hpp"
#include "psum/special_sequences.hpp"

using namespace psum;
using namespace psum::cli;

namespace {

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("formula text matches the factored displays") {
  FormulaArgs a;
  a.power = "odd";
  a.m = 2;
  CHECK(first_line(run_formula(a).out) == "S_3 = 1/4*lambda^2 + 1/2*(x^2 + x)*lambda");
  a.m = 3;
  CHECK(first_line(run_formula(a).out) == "S_5 = 1/6*lambda^3 + 1/12*(6*x^2 + 6*x - 1)*lambda^2 + 1/6*(3*x^4 + 6*x^3 + 2*x^2 - x)*lambda");
  a.format = Format::kLatex;
  CHECK(first_line(run_formula(a).out) ==
        "S_{5} = \\frac{1}{6}\\lambda^{3} + \\frac{1}{12}\\left(6x^{2} + 6x - 1\\right)\\lambda^{2} + "
        "\\frac{1}{6}\\left(3x^{4} + 6x^{3} + 2x^{2} - x\\right)\\lambda");
}

TEST_CASE("formula power spellings and errors") {
  FormulaArgs a;
  a.power = "7";
  FormulaArgs b;
  b.power = "2m-1";
  b.m = 4;
  CHECK(run_formula(a).out == run_formula(b).out);
  a.m = 3;
  CHECK_THROWS_AS(run_formula(a), ParseError);
  FormulaArgs c;
  c.power = "4";
  CHECK_THROWS_AS(run_formula(c), ParseError);
  FormulaArgs d;
  d.power = "odd";
  CHECK_THROWS_AS(run_formula(d), ParseError);
  FormulaArgs e;
  e.power = "3";
  e.alt_power = "2";
  CHECK_THROWS_AS(run_formula(e), ParseError);
  FormulaArgs g;
  CHECK_THROWS_AS(run_formula(g), ParseError);
}

TEST_CASE("formula json round trips") {
  for (unsigned m = 1; m <= 5; ++m) {
    FormulaArgs a;
    a.power = "odd";
    a.m = m;
    a.format = Format::kJson;
    const Json j = Json::parse(run_formula(a).out);
    CHECK(bipoly_from_json(j.at("expansion")) == faulhaber_coeffs(m).in_lambda());
    CHECK(j.at("power") == 2 * m - 1);
  }

  FormulaArgs alt;
  alt.alt_power = "even";
  alt.m = 3;
  alt.x = "1/2";
  alt.format = Format::kJson;
  const Json j = Json::parse(run_formula(alt).out);
  const Poly even = poly_from_json(j.at("expansion_even_n"));
  const Poly odd = poly_from_json(j.at("expansion_odd_n"));
  const Poly lambda = poly_from_json(j.at("lambda"));
  for (long n = 1; n <= 10; ++n) {
    const Poly& p = n % 2 == 0 ? even : odd;
    CHECK(p(lambda(Rational(n))) == alternating_power_sum_direct(6, Rational(1, 2), n));
  }

  FormulaArgs prog;
  prog.progression = "1/2,3";
  prog.m = 2;
  prog.format = Format::kJson;
  const Json pj = Json::parse(run_formula(prog).out);
  const Poly in_mu = poly_from_json(pj.at("expansion"));
  const Poly mu = poly_from_json(pj.at("mu"));
  Rational direct;
  for (long n = 1; n <= 8; ++n) {
    direct += pow(Rational(1, 2) + Rational(3 * n), 3);
    CHECK(in_mu(mu(Rational(n))) == direct);
  }
  prog.progression = "1,0";
  CHECK_THROWS_AS(run_formula(prog), DegenerateProgression);
}

TEST_CASE("seq") {
  SeqArgs a{"bernoulli", 12, Format::kJson};
  const Json j = Json::parse(run_seq(a).out);
  CHECK(j.at("numbers").size() == 13);
  CHECK(rational_from_json(j.at("numbers")[12]) == Rational(-691, 2730));
  CHECK(poly_from_json(j.at("polynomials")[3]) == bernoulli_poly(3));

  SeqArgs e{"euler", 6, Format::kText};
  const std::string text = run_seq(e).out;
  CHECK(text.find("E_2  = -1 ") != std::string::npos);
  CHECK(text.find("E_6  = -61 ") != std::string::npos);

  SeqArgs c{"central", 6, Format::kJson};
  const Json cj = Json::parse(run_seq(c).out);
  CHECK(cj.at("rows").size() == 6);
  CHECK(rational_from_json(cj.at("rows")[5][3]) == Rational(5));

  SeqArgs bad{"stirling", 3, Format::kText};
  CHECK_THROWS_AS(run_seq(bad), ParseError);
}

TEST_CASE("rfold command") {
  RfoldArgs a;
  a.r = 3;
  a.power = 3;
  a.verify = true;
  a.format = Format::kJson;
  const CommandResult res = run_rfold(a);
  CHECK(res.exit_code == 0);
  const Json j = Json::parse(res.out);
  CHECK(j.at("kind") == "odd_power");
  CHECK(j.at("verify").at("pass") == true);
  CHECK(j.contains("correction"));

  RfoldArgs f;
  f.r = 2;
  f.falling = 1;
  f.x = "0";
  f.format = Format::kJson;
  const Poly value = poly_from_json(Json::parse(run_rfold(f).out).at("value"));
  CHECK(value(Rational(4)) == Rational(20));

  RfoldArgs both;
  both.power = 2;
  both.falling = 2;
  CHECK_THROWS_AS(run_rfold(both), ParseError);
}

TEST_CASE("alt command") {
  AltArgs a;
  a.r = 2;
  a.power = 2;
  a.n = "6";
  a.format = Format::kJson;
  const Json j = Json::parse(run_alt(a).out);
  CHECK(j.at("closed") == "12");
  CHECK(j.at("agree") == true);

  AltArgs fit;
  fit.r = 3;
  fit.power = 3;
  fit.fit = true;
  fit.format = Format::kJson;
  const Json fj = Json::parse(run_alt(fit).out);
  CHECK(poly_from_json(fj.at("F")) == structure_fit(3, 3).f);
  CHECK(fj.contains("nu_definition"));
  fit.x = "1/2";
  CHECK_THROWS_AS(run_alt(fit), ParseError);

  AltArgs polys;
  polys.r = 1;
  polys.power = 0;
  polys.format = Format::kJson;
  const Json pj = Json::parse(run_alt(polys).out);
  CHECK(poly_from_json(pj.at("odd_n")) == Poly::constant(Rational(-1)));
  CHECK(poly_from_json(pj.at("even_n")).is_zero());
}

TEST_CASE("gf command") {
  GfArgs a{"faulhaber", 4, 4, std::nullopt, std::nullopt, 16, Format::kJson};
  CHECK(run_gf(a).exit_code == 0);
  a.which = "alternating";
  CHECK(run_gf(a).exit_code == 0);
  a.which = "euler-sqrt";
  CHECK(run_gf(a).exit_code == 0);
  GfArgs small{"faulhaber", 6, 6, std::size_t{5}, std::size_t{3}, 16, Format::kText};
  CHECK_THROWS_AS(run_gf(small), TruncationError);
  GfArgs tex{"faulhaber", 2, 2, std::nullopt, std::nullopt, 16, Format::kLatex};
  CHECK_THROWS_AS(run_gf(tex), ParseError);
}

TEST_CASE("eval command") {
  EvalArgs a;
  a.power = 3;
  a.n = "10";
  const EvalReport r = evaluate_power_sum(a);
  CHECK(r.closed == Rational(3025));
  REQUIRE(r.naive.has_value());
  CHECK(*r.naive == Rational(3025));

  EvalArgs big;
  big.power = 1;
  big.n = "1000000";
  big.closed_only = true;
  const EvalReport rb = evaluate_power_sum(big);
  CHECK(rb.closed == Rational(BigInt("500000500000")));
  CHECK_FALSE(rb.naive.has_value());

  EvalArgs huge;
  huge.power = 2;
  huge.n = "100000000000000000000";
  CHECK(evaluate_power_sum(huge).naive_skipped.has_value());
  huge.force_naive = true;
  CHECK_THROWS_AS(evaluate_power_sum(huge), Error);

  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned p = 0; p <= 5; ++p) {
      EvalArgs e;
      e.power = p;
      e.r = r;
      e.n = "17";
      e.x = "2/3";
      const EvalReport er = evaluate_power_sum(e);
      CHECK(er.naive.has_value());
      CHECK(*er.naive == er.closed);
      e.alternating = true;
      const EvalReport ea = evaluate_power_sum(e);
      CHECK(*ea.naive == ea.closed);
    }
  }

  EvalArgs zero;
  zero.power = 4;
  zero.n = "0";
  CHECK(evaluate_power_sum(zero).closed == Rational(0));
  EvalArgs frac;
  frac.n = "3/2";
  CHECK_THROWS_AS(evaluate_power_sum(frac), ParseError);
}

TEST_CASE("verify command") {
  VerifyArgs a;
  a.config.max_m = 2;
  a.config.max_r = 2;
  a.config.max_n = 6;
  const CommandResult res = run_verify(a);
  CHECK(res.exit_code == 0);
  const Json j = Json::parse(res.out);
  CHECK(j.at("all_pass") == true);
  CHECK(j.at("checks").size() >= 10);
  for (const auto& c : j.at("checks")) {
    CHECK(c.contains("name"));
    CHECK(c.at("params").is_object());
    CHECK(c.at("counterexample").is_null());
  }
  a.sequential = true;
  CHECK(run_verify(a).out == res.out);

  a.self_test_negative = true;
  const CommandResult bad = run_verify(a);
  CHECK(bad.exit_code != 0);
  CHECK(bad.err.find("bernoulli.") != std::string::npos);
  CHECK(Json::parse(bad.out).at("all_pass") == false);

  VerifyArgs zero;
  zero.config.max_m = 0;
  CHECK_THROWS_AS(run_verify(zero), ParseError);
}
