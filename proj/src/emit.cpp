#include "psum/emit.hpp"

#include <sstream>

#include "psum/errors.hpp"

namespace psum {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::kText;
  if (name == "latex") return Format::kLatex;
  if (name == "json") return Format::kJson;
  throw ParseError("unknown format '" + name + "'");
}

Json to_json(const Rational& r) {
  return Json{{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw ParseError("rational JSON needs num and den");
  }
  return Rational(BigInt(j.at("num").get<std::string>(), 10), BigInt(j.at("den").get<std::string>(), 10));
}

Poly poly_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  return Poly(j.at("variable").get<std::string>(), std::move(coeffs));
}

BiPoly bipoly_from_json(const Json& j) {
  std::vector<Poly> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (c.contains("variable")) {
      coeffs.push_back(poly_from_json(c));
    } else {
      coeffs.push_back(Poly::constant(rational_from_json(c)));
    }
  }
  return BiPoly(j.at("variable").get<std::string>(), std::move(coeffs));
}

std::string latex_variable(const std::string& tag) {
  if (tag == "lambda" || tag == "mu" || tag == "nu") return "\\" + tag;
  return tag;
}

namespace {

std::string magnitude(const Rational& r, Format format) {
  const Rational a = r.sign() < 0 ? -r : r;
  if (a.is_integer()) return a.numerator().get_str();
  if (format == Format::kLatex) {
    return "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
  }
  return a.to_string();
}

std::string monomial(const std::string& var, std::size_t power, Format format) {
  if (power == 0) return "";
  const std::string v = format == Format::kLatex ? latex_variable(var) : var;
  if (power == 1) return v;
  if (format == Format::kLatex) return v + "^{" + std::to_string(power) + "}";
  return v + "^" + std::to_string(power);
}

struct Term {
  bool negative = false;
  std::string body;
};

std::string join(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      out += terms[i].negative ? "-" : "";
    } else {
      out += terms[i].negative ? " - " : " + ";
    }
    out += terms[i].body;
  }
  return out;
}

std::string glue(const std::string& coeff, const std::string& mono, Format format) {
  if (coeff.empty()) return mono.empty() ? "1" : mono;
  if (mono.empty()) return coeff;
  return format == Format::kLatex ? coeff + mono : coeff + "*" + mono;
}

std::vector<Term> terms_of(const Poly& p, Format format) {
  std::vector<Term> out;
  const auto cs = p.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    if (cs[i].is_zero()) continue;
    const bool unit = (cs[i] == Rational(1) || cs[i] == Rational(-1)) && i > 0;
    out.push_back({cs[i].sign() < 0, glue(unit ? "" : magnitude(cs[i], format), monomial(p.variable(), i, format), format)});
  }
  return out;
}

std::string parenthesize(const std::string& body, Format format) {
  return format == Format::kLatex ? "\\left(" + body + "\\right)" : "(" + body + ")";
}

}  // namespace

Rational content(const Poly& p) {
  if (p.is_zero()) return Rational(0);
  BigInt g = 0;
  BigInt l = 1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    const BigInt num = abs(c.numerator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    const BigInt den = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  const Rational out(g, l);
  return p.coeffs().back().sign() < 0 ? -out : out;
}

std::string render(const Rational& r, Format format) {
  if (format == Format::kJson) return to_json(r).dump();
  return (r.sign() < 0 ? "-" : "") + magnitude(r, format);
}

std::string render(const Poly& p, Format format) {
  if (format == Format::kJson) return to_json(p).dump();
  return join(terms_of(p, format));
}

std::string render(const BiPoly& p, Format format) {
  if (format == Format::kJson) return to_json(p).dump();
  std::vector<Term> out;
  const auto cs = p.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    if (cs[i].is_zero()) continue;
    const std::string mono = monomial(p.variable(), i, format);
    auto inner = terms_of(cs[i], format);
    if (inner.size() == 1) {
      const std::string& body = inner.front().body;
      const bool unit = body == "1" && !mono.empty();
      out.push_back({inner.front().negative, glue(unit ? "" : body, mono, format)});
    } else {
      const std::string open = format == Format::kLatex ? "\\left(" : "(";
      const std::string close = format == Format::kLatex ? "\\right)" : ")";
      out.push_back({false, glue(open + join(inner) + close, mono, format)});
    }
  }
  return join(out);
}

std::string render_factored(const BiPoly& p, Format format) {
  if (format == Format::kJson) return to_json(p).dump();
  std::vector<Term> out;
  const auto cs = p.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    if (cs[i].is_zero()) continue;
    const std::string mono = monomial(p.variable(), i, format);
    if (cs[i].degree() <= 0) {
      const Rational c = cs[i].coeffs().front();
      const bool unit = (c == Rational(1) || c == Rational(-1)) && !mono.empty();
      out.push_back({c.sign() < 0, glue(unit ? "" : magnitude(c, format), mono, format)});
      continue;
    }
    const Rational k = content(cs[i]);
    const std::string body = parenthesize(render(cs[i] * (Rational(1) / k), format), format);
    const bool unit = k == Rational(1) || k == Rational(-1);
    const std::string lead = unit ? body : glue(magnitude(k, format), body, format);
    out.push_back({k.sign() < 0, glue(lead, mono, format)});
  }
  return join(out);
}

}  // namespace psum
