#pragma once

#include <string>

#include "json.hpp"
#include "psum/polynomial.hpp"
#include "psum/rational.hpp"

namespace psum {

using Json = nlohmann::json;

enum class Format { kText, kLatex, kJson };

Format parse_format(const std::string& name);

/// {"num": "<decimal>", "den": "<decimal>"}
Json to_json(const Rational& r);

/// {"variable": "<tag>", "coeffs": [ring element, ...]}, index = degree.
template <class R>
Json to_json(const Polynomial<R>& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"variable", p.variable()}, {"coeffs", std::move(coeffs)}};
}

Rational rational_from_json(const Json& j);
Poly poly_from_json(const Json& j);
BiPoly bipoly_from_json(const Json& j);

/// \lambda for "lambda", \mu, \nu; other tags verbatim.
std::string latex_variable(const std::string& tag);

std::string render(const Rational& r, Format format);
std::string render(const Poly& p, Format format);
std::string render(const BiPoly& p, Format format);

/// Rational c with the sign of the leading coefficient such that p / c is primitive
/// over the integers; 0 for the zero polynomial.
Rational content(const Poly& p);

/// Like render, but every non-constant outer coefficient is written as
/// content * (primitive integer polynomial), e.g. 1/12*(6*x^2 + 6*x - 1)*lambda^2.
std::string render_factored(const BiPoly& p, Format format);

}  // namespace psum
