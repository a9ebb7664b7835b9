#include "psum/commands.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "psum/alternating.hpp"
#include "psum/errors.hpp"
#include "psum/faulhaber.hpp"
#include "psum/generating_functions.hpp"
#include "psum/rfold.hpp"
#include "psum/special_sequences.hpp"

namespace psum::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string x_label(const std::optional<Rational>& x) { return x ? x->to_string() : "x"; }

// "(x + i)", or "i" when the shift is zero.
std::string shifted_i(const std::optional<Rational>& x) { return x && x->is_zero() ? "i" : "(" + x_label(x) + " + i)"; }

Json x_json(const std::optional<Rational>& x) { return x ? Json(x->to_string()) : Json("sym"); }

BigInt parse_integer(const std::string& text, const std::string& what) {
  const Rational v = Rational::parse(text);
  if (!v.is_integer()) throw ParseError(what + " must be an integer, got '" + text + "'");
  return v.numerator();
}

long to_long(const BigInt& v) {
  if (!v.fits_slong_p()) throw ParseError("value out of range: " + v.get_str());
  return v.get_si();
}

void require_no_latex(Format format, const std::string& command) {
  if (format == Format::kLatex) throw ParseError(command + " supports --format json or text");
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

// "S_5 = ..." in text, "S_{5} = ..." in LaTeX.
std::string label(const std::string& base, const std::string& index, Format format) {
  return format == Format::kLatex ? base + "_{" + index + "}" : base + "_" + index;
}

std::string lambda_line(const std::optional<Rational>& x, Format format) {
  if (!x) {
    return format == Format::kLatex ? "\\lambda = n(n+2x+1)" : "lambda = n*(n + 2*x + 1)";
  }
  const Poly l = bind_inner(lambda_in_n(), *x);
  return (format == Format::kLatex ? "\\lambda = " : "lambda = ") + render(l, format);
}

// Odd power m >= 1 from "odd"/"2m-1" plus --m, or from the literal exponent.
unsigned resolve_m(const std::string& power, const std::optional<unsigned>& m, bool odd) {
  const std::string symbolic = odd ? "2m-1" : "2m";
  const std::string word = odd ? "odd" : "even";
  if (power == word || power == symbolic) {
    if (!m) throw ParseError("--m is required with '" + power + "'");
    if (odd && *m == 0) throw ParseError("odd power sums need m >= 1");
    return *m;
  }
  const BigInt p = parse_integer(power, "power");
  if (p < 0 || (p % 2 == 0) == odd) throw ParseError("power " + power + " is not " + (odd ? "a positive odd" : "a non-negative even") + " integer");
  const unsigned derived = static_cast<unsigned>(odd ? (to_long(p) + 1) / 2 : to_long(p) / 2);
  if (m && *m != derived) throw ParseError("--m " + std::to_string(*m) + " disagrees with power " + power);
  return derived;
}

CommandResult formula_odd(unsigned m, const std::optional<Rational>& x, Format format) {
  const LambdaExpansion e = faulhaber_coeffs(m);
  const BiPoly sym = e.in_lambda();
  const std::string p = std::to_string(2 * m - 1);
  CommandResult res;
  if (format == Format::kJson) {
    Json j{{"kind", "odd_power_sum"}, {"m", m}, {"power", 2 * m - 1}, {"x", x_json(x)}};
    j["lambda"] = x ? to_json(bind_inner(lambda_in_n(), *x)) : to_json(lambda_in_n());
    j["expansion"] = x ? to_json(bind_inner(sym, *x)) : to_json(sym);
    res.out = j.dump(2) + "\n";
    return res;
  }
  const std::string body = x ? render(bind_inner(sym, *x), format) : render_factored(sym, format);
  std::vector<std::string> lines{label("S", p, format) + " = " + body};
  if (format == Format::kLatex) {
    lines.push_back(label("S", p, format) + " = \\sum_{i=1}^{n} (" + (x ? render(*x, format) : "x") + "+i)^{" + p + "}, \\quad " + lambda_line(x, format));
  } else {
    lines.push_back("where " + label("S", p, format) + " = sum_{i=1}^{n} " + shifted_i(x) + "^" + p + ", " + lambda_line(x, format));
  }
  res.out = join_lines(lines);
  return res;
}

CommandResult formula_alternating(unsigned m, const std::optional<Rational>& x, Format format) {
  const LambdaExpansion e = alternating_coeffs(m);
  const BiPoly even = e.in_lambda(Parity::kEven);
  const BiPoly odd = e.in_lambda(Parity::kOdd);
  const std::string p = std::to_string(2 * m);
  CommandResult res;
  if (format == Format::kJson) {
    Json j{{"kind", "alternating_even_power_sum"}, {"m", m}, {"power", 2 * m}, {"x", x_json(x)}};
    j["lambda"] = x ? to_json(bind_inner(lambda_in_n(), *x)) : to_json(lambda_in_n());
    j["expansion_even_n"] = x ? to_json(bind_inner(even, *x)) : to_json(even);
    j["expansion_odd_n"] = x ? to_json(bind_inner(odd, *x)) : to_json(odd);
    res.out = j.dump(2) + "\n";
    return res;
  }
  const auto show = [&](const BiPoly& b) { return x ? render(bind_inner(b, *x), format) : render_factored(b, format); };
  const bool tex = format == Format::kLatex;
  std::vector<std::string> lines{
      label("A", p, format) + " = " + show(even) + (tex ? " \\quad (n \\text{ even})" : "    (n even)"),
      label("A", p, format) + " = " + show(odd) + (tex ? " \\quad (n \\text{ odd})" : "    (n odd)"),
  };
  if (tex) {
    lines.push_back(label("A", p, format) + " = \\sum_{i=1}^{n} (-1)^{n-i} (" + (x ? render(*x, format) : "x") + "+i)^{" + p + "}, \\quad " + lambda_line(x, format));
  } else {
    lines.push_back("where " + label("A", p, format) + " = sum_{i=1}^{n} (-1)^(n-i) " + shifted_i(x) + "^" + p + ", " + lambda_line(x, format));
  }
  res.out = join_lines(lines);
  return res;
}

CommandResult formula_progression(const std::string& spec_text, const std::optional<unsigned>& m, Format format) {
  const auto comma = spec_text.find(',');
  if (comma == std::string::npos) throw ParseError("--progression expects a,b");
  if (!m || *m == 0) throw ParseError("--progression needs --m M with M >= 1");
  const ProgressionSpec spec{Rational::parse(spec_text.substr(0, comma)), Rational::parse(spec_text.substr(comma + 1))};
  const Poly mu = progression_mu(spec);
  const Poly sum = progression_power_sum(spec, *m);
  const std::string p = std::to_string(2 * *m - 1);
  CommandResult res;
  if (format == Format::kJson) {
    Json j{{"kind", "progression_power_sum"}, {"a", spec.a.to_string()}, {"b", spec.b.to_string()}, {"m", *m}, {"power", 2 * *m - 1}};
    j["mu"] = to_json(mu);
    j["expansion"] = to_json(sum);
    res.out = j.dump(2) + "\n";
    return res;
  }
  const std::string a = render(spec.a, format);
  const std::string b = render(spec.b, format);
  if (format == Format::kLatex) {
    res.out = join_lines({"\\sum_{i=1}^{n} (" + a + " + " + b + " i)^{" + p + "} = " + render(sum, format),
                          "\\mu = " + render(mu, format)});
  } else {
    res.out = join_lines({"sum_{i=1}^{n} (" + a + " + " + b + "*i)^" + p + " = " + render(sum, format), "mu = " + render(mu, format)});
  }
  return res;
}

}  // namespace

std::optional<Rational> parse_x(const std::string& text) {
  if (text == "sym") return std::nullopt;
  return Rational::parse(text);
}

CommandResult run_formula(const FormulaArgs& args) {
  const int modes = (args.power ? 1 : 0) + (args.alt_power ? 1 : 0) + (args.progression ? 1 : 0);
  if (modes != 1) throw ParseError("formula needs exactly one of --power, --alt-power, --progression");
  if (args.progression) return formula_progression(*args.progression, args.m, args.format);
  const auto x = parse_x(args.x);
  if (args.power) return formula_odd(resolve_m(*args.power, args.m, true), x, args.format);
  return formula_alternating(resolve_m(*args.alt_power, args.m, false), x, args.format);
}

CommandResult run_seq(const SeqArgs& args) {
  CommandResult res;
  const Format f = args.format;
  if (args.kind == "bernoulli" || args.kind == "euler") {
    const bool bern = args.kind == "bernoulli";
    const std::string sym = bern ? "B" : "E";
    std::vector<Rational> numbers;
    std::vector<Poly> polys;
    for (std::size_t n = 0; n <= args.max; ++n) {
      numbers.push_back(bern ? bernoulli_table().number(n) : euler_table().number(n));
      polys.push_back(bern ? bernoulli_poly(n) : euler_poly(n));
    }
    if (f == Format::kJson) {
      Json nums = Json::array();
      Json ps = Json::array();
      for (std::size_t n = 0; n <= args.max; ++n) {
        nums.push_back(to_json(numbers[n]));
        ps.push_back(to_json(polys[n]));
      }
      res.out = Json{{"kind", args.kind}, {"max", args.max}, {"numbers", nums}, {"polynomials", ps}}.dump(2) + "\n";
      return res;
    }
    std::ostringstream os;
    if (f == Format::kLatex) {
      for (std::size_t n = 0; n <= args.max; ++n) {
        os << sym << "_{" << n << "} &= " << render(numbers[n], f) << ", & " << sym << "_{" << n << "}(x) &= " << render(polys[n], f) << " \\\\\n";
      }
    } else {
      std::size_t width = 0;
      for (const auto& v : numbers) width = std::max(width, render(v, f).size());
      const std::size_t label_width = 3 + std::to_string(args.max).size();
      for (std::size_t n = 0; n <= args.max; ++n) {
        os << std::left << std::setw(static_cast<int>(label_width)) << (sym + "_" + std::to_string(n)) << " = "
           << std::setw(static_cast<int>(width)) << render(numbers[n], f) << "   " << sym << "_" << n << "(x) = " << render(polys[n], f) << "\n";
      }
    }
    res.out = os.str();
    return res;
  }
  if (args.kind == "central") {
    if (args.max == 0) throw ParseError("central factorial rows start at m = 1");
    std::vector<std::vector<Rational>> rows;
    for (unsigned m = 1; m <= args.max; ++m) rows.push_back(central_factorial_table().row(m));
    if (f == Format::kJson) {
      Json out = Json::array();
      for (const auto& row : rows) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        out.push_back(r);
      }
      res.out = Json{{"kind", "central"}, {"max", args.max}, {"rows", out}}.dump(2) + "\n";
      return res;
    }
    std::ostringstream os;
    if (f == Format::kLatex) {
      for (unsigned m = 1; m <= args.max; ++m) {
        os << "m=" << m;
        for (const auto& v : rows[m - 1]) os << " & " << render(v, f);
        os << " \\\\\n";
      }
    } else {
      std::size_t width = 1;
      for (const auto& row : rows) {
        for (const auto& v : row) width = std::max(width, v.to_string().size());
      }
      os << "T(m, k), k = 1..m\n";
      for (unsigned m = 1; m <= args.max; ++m) {
        os << "m=" << std::left << std::setw(static_cast<int>(std::to_string(args.max).size())) << m << " ";
        for (const auto& v : rows[m - 1]) os << " " << std::right << std::setw(static_cast<int>(width)) << v.to_string();
        os << "\n";
      }
    }
    res.out = os.str();
    return res;
  }
  throw ParseError("unknown --kind '" + args.kind + "' (bernoulli, euler, central)");
}

CommandResult run_rfold(const RfoldArgs& args) {
  if (args.power.has_value() == args.falling.has_value()) throw ParseError("rfold needs exactly one of --power, --falling");
  const auto x = args.x ? parse_x(*args.x) : std::nullopt;
  const RFoldClosedForm form = args.falling ? rfold_falling(args.r, *args.falling) : rfold_power(args.r, *args.power);
  const Format f = args.format;
  const unsigned index = form.m_or_l;
  const bool falling_term = args.falling.has_value();

  Json verify = nullptr;
  bool verified = true;
  if (args.verify) {
    if (args.max_n < 1) throw ParseError("--max-n must be positive");
    const std::vector<Rational> grid = x ? std::vector<Rational>{*x} : SuiteConfig{}.xs;
    Json bad = nullptr;
    for (const auto& xv : grid) {
      const TermFn term = falling_term ? TermFn([xv, index](long i) { return falling(xv + Rational(i), index); }) : shifted_power(xv, index);
      const auto brute = rfold_bruteforce_table(form.fold, term, args.max_n);
      for (long n = 1; n <= args.max_n && bad.is_null(); ++n) {
        const Rational got = form.evaluate(xv, n);
        if (got != brute[static_cast<std::size_t>(n - 1)]) {
          bad = Json{{"x", xv.to_string()}, {"n", n}, {"expected", brute[static_cast<std::size_t>(n - 1)].to_string()}, {"got", got.to_string()}};
        }
      }
      if (!bad.is_null()) break;
    }
    verified = bad.is_null();
    Json grid_json = Json::array();
    for (const auto& v : grid) grid_json.push_back(v.to_string());
    verify = Json{{"pass", verified}, {"x", grid_json}, {"n", "1.." + std::to_string(args.max_n)}, {"counterexample", bad}};
  }

  CommandResult res;
  res.exit_code = verified ? 0 : 1;
  if (f == Format::kJson) {
    Json j{{"fold", args.r}, {"kind", to_string(form.kind)}, {"x", x_json(x)}};
    j[falling_term ? "falling" : "power"] = index;
    if (x) {
      j["value"] = to_json(bind_inner(form.value, *x));
    } else {
      j["value"] = to_json(form.value);
      j["correction"] = to_json(form.correction);
    }
    j["verify"] = verify;
    res.out = j.dump(2) + "\n";
    return res;
  }
  const std::string xs = x ? render(*x, f) : "x";
  std::string lhs;
  if (f == Format::kLatex) {
    const std::string base = x && x->is_zero() ? "n" : "(" + xs + "+n)";
    lhs = "\\Sigma^{" + std::to_string(args.r) + "} " + base + (falling_term ? "_{" : "^{") + std::to_string(index) + "}";
  } else {
    const std::string base = x && x->is_zero() ? "n" : "(" + xs + " + n)";
    lhs = "Sigma^" + std::to_string(args.r) + " " + base + (falling_term ? "_" : "^") + std::to_string(index);
  }
  const std::string rhs = x ? render(bind_inner(form.value, *x), f) : render(form.value, f);
  std::vector<std::string> lines{lhs + " = " + rhs};
  if (f == Format::kText) lines.push_back("kind: " + to_string(form.kind));
  if (args.verify) {
    lines.push_back(std::string("verify: ") + (verified ? "PASS" : "FAIL") + " against brute force on n = 1.." + std::to_string(args.max_n) +
                    (verified ? "" : ", counterexample " + verify.at("counterexample").dump()));
  }
  res.out = join_lines(lines);
  return res;
}

CommandResult run_alt(const AltArgs& args) {
  if (args.r == 0) throw ParseError("alt needs --r >= 1");
  if (args.fit && args.n) throw ParseError("--fit and --n are exclusive");
  const Rational x = args.x ? Rational::parse(*args.x) : Rational(0);
  const Format f = args.format;
  CommandResult res;

  if (args.fit) {
    if (!x.is_zero()) throw ParseError("--fit describes the x = 0 sum");
    const StructureFit fit = structure_fit(args.r, args.power);
    if (f == Format::kJson) {
      res.out = to_json(fit).dump(2) + "\n";
      return res;
    }
    const bool tex = f == Format::kLatex;
    res.out = join_lines({
        std::string(tex ? "\\Sigma^{" : "Sigma^") + std::to_string(args.r) + (tex ? "} (-1)^n n^{" : " (-1)^n n^") + std::to_string(args.power) +
            (tex ? "}" : "") + " = (-1)^n (" + render(fit.f_prefactor, f) + ") F(" + (tex ? "\\nu" : "nu") + ") + (" + render(fit.g_prefactor, f) + ") G(" +
            (tex ? "\\nu" : "nu") + ")",
        std::string(tex ? "\\nu" : "nu") + " = " + render(fit.nu, f),
        "F = " + render(fit.f, f),
        "G = " + render(fit.g, f),
        std::string("case ") + fit.label + ", deg F = " + std::to_string(fit.f.degree()) + ", deg G = " + std::to_string(fit.g.degree()),
    });
    return res;
  }

  if (args.n) {
    const BigInt n = parse_integer(*args.n, "--n");
    if (n < 1) throw ParseError("--n must be >= 1");
    const Rational closed = alt_rfold_closed(args.r, args.power, x, Rational(n));
    const BigInt ceiling = parse_integer(args.naive_ceiling, "--naive-ceiling");
    std::optional<Rational> brute;
    if (n <= ceiling) brute = alt_bruteforce(args.r, args.power, x, to_long(n));
    const bool agree = !brute || *brute == closed;
    res.exit_code = agree ? 0 : 1;
    if (f == Format::kJson) {
      Json j{{"fold", args.r}, {"power", args.power}, {"x", x.to_string()}, {"n", n.get_str()}, {"closed", closed.to_string()}};
      j["bruteforce"] = brute ? Json(brute->to_string()) : Json(nullptr);
      j["agree"] = brute ? Json(agree) : Json(nullptr);
      res.out = j.dump(2) + "\n";
      return res;
    }
    std::vector<std::string> lines{"closed:     " + render(closed, f)};
    lines.push_back(brute ? "bruteforce: " + render(*brute, f) : "bruteforce: skipped (n above naive ceiling)");
    if (brute) lines.push_back(std::string("agree:      ") + (agree ? "yes" : "no"));
    res.out = join_lines(lines);
    return res;
  }

  const Poly even = alt_rfold_closed_poly(args.r, args.power, x, Parity::kEven);
  const Poly odd = alt_rfold_closed_poly(args.r, args.power, x, Parity::kOdd);
  if (f == Format::kJson) {
    res.out = Json{{"fold", args.r}, {"power", args.power}, {"x", x.to_string()}, {"even_n", to_json(even)}, {"odd_n", to_json(odd)}}.dump(2) + "\n";
    return res;
  }
  const std::string xs = render(x, f);
  if (f == Format::kLatex) {
    const std::string base = x.is_zero() ? "n" : "(" + xs + "+n)";
    const std::string lhs = "\\Sigma^{" + std::to_string(args.r) + "} (-1)^n " + base + "^{" + std::to_string(args.power) + "}";
    res.out = join_lines({lhs + " = " + render(even, f) + " \\quad (n \\text{ even})", lhs + " = " + render(odd, f) + " \\quad (n \\text{ odd})"});
  } else {
    const std::string base = x.is_zero() ? "n" : "(" + xs + " + n)";
    const std::string lhs = "Sigma^" + std::to_string(args.r) + " (-1)^n " + base + "^" + std::to_string(args.power);
    res.out = join_lines({lhs + " = " + render(even, f) + "    (n even)", lhs + " = " + render(odd, f) + "    (n odd)"});
  }
  return res;
}

CommandResult run_gf(const GfArgs& args) {
  require_no_latex(args.format, "gf");
  CommandResult res;
  const bool json = args.format == Format::kJson;
  if (args.which == "euler-sqrt") {
    const EulerSqrtReport report = euler_sqrt_check(args.sqrt_order);
    res.out = json ? to_json(report).dump(2) + "\n" : render_text(report);
    res.exit_code = report.all_pass() ? 0 : 1;
    return res;
  }
  // Unset orders grow to what the requested grid needs.
  SeriesOrders orders;
  orders.y = args.y_order.value_or(std::max<std::size_t>(orders.y, 2 * static_cast<std::size_t>(args.max_m) + 1));
  orders.t = args.t_order.value_or(std::max<std::size_t>(orders.t, static_cast<std::size_t>(args.max_k) + 1));
  GfReport report;
  if (args.which == "faulhaber") {
    report = gf_faulhaber_check(args.max_m, args.max_k, orders);
  } else if (args.which == "alternating") {
    report = gf_alternating_check(args.max_m, args.max_k, orders);
  } else {
    throw ParseError("unknown --which '" + args.which + "' (faulhaber, alternating, euler-sqrt)");
  }
  res.out = json ? to_json(report).dump(2) + "\n" : render_text(report);
  res.exit_code = report.all_pass() ? 0 : 1;
  return res;
}

EvalReport evaluate_power_sum(const EvalArgs& args) {
  const BigInt n = parse_integer(args.n, "--n");
  if (n < 0) throw ParseError("--n must be >= 0");
  const Rational x = Rational::parse(args.x);
  const Rational nq(n);
  EvalReport report;

  auto t0 = Clock::now();
  if (args.alternating) {
    if (args.r == 0) throw ParseError("alternating sums need --r >= 1");
    report.method = "alternating_rfold_closed";
    if (n == 0) {
      report.closed = Rational(0);
    } else {
      const Poly form = alt_rfold_closed_poly(args.r, args.power, x, mpz_even_p(n.get_mpz_t()) ? Parity::kEven : Parity::kOdd);
      report.build_ms = ms_since(t0);
      t0 = Clock::now();
      report.closed = form(nq);
    }
  } else if (args.r == 1 && args.power % 2 == 1) {
    report.method = "lambda_expansion";
    const Poly in_lambda = bind_inner(faulhaber_coeffs((args.power + 1) / 2).in_lambda(), x);
    report.build_ms = ms_since(t0);
    t0 = Clock::now();
    report.closed = in_lambda(nq * (nq + Rational(2) * x + Rational(1)));
  } else if (args.r == 1) {
    report.method = "bernoulli_difference";
    const Poly in_n = bind_inner(direct_power_sum_poly(args.power), x);
    report.build_ms = ms_since(t0);
    t0 = Clock::now();
    report.closed = in_n(nq);
  } else {
    const RFoldClosedForm form = rfold_power(args.r, args.power);
    report.method = "rfold_" + to_string(form.kind);
    const Poly in_n = bind_inner(form.value, x);
    report.build_ms = ms_since(t0);
    t0 = Clock::now();
    report.closed = in_n(nq);
  }
  report.closed_ms = ms_since(t0);

  if (args.closed_only) {
    report.naive_skipped = "closed form only";
    return report;
  }
  const BigInt ceiling = parse_integer(args.naive_ceiling, "--naive-ceiling");
  if (n > ceiling) {
    if (args.force_naive) throw Error("naive summation refused: n = " + n.get_str() + " exceeds the ceiling " + ceiling.get_str());
    report.naive_skipped = "n above naive ceiling " + ceiling.get_str();
    return report;
  }
  const long nl = to_long(n);
  t0 = Clock::now();
  if (nl == 0) {
    report.naive = Rational(0);
  } else if (args.alternating) {
    report.naive = alt_bruteforce(args.r, args.power, x, nl);
  } else {
    report.naive = rfold_bruteforce(args.r, shifted_power(x, args.power), nl);
  }
  report.naive_ms = ms_since(t0);
  return report;
}

CommandResult run_eval(const EvalArgs& args) {
  if (args.force_naive && args.closed_only) throw ParseError("--naive and --closed-only are exclusive");
  require_no_latex(args.format, "eval");
  const EvalReport r = evaluate_power_sum(args);
  const bool agree = !r.naive || *r.naive == r.closed;
  CommandResult res;
  res.exit_code = agree ? 0 : 1;
  if (args.format == Format::kJson) {
    Json j{{"power", args.power}, {"r", args.r}, {"x", Rational::parse(args.x).to_string()}, {"n", parse_integer(args.n, "--n").get_str()},
           {"alternating", args.alternating}, {"method", r.method}, {"closed", r.closed.to_string()},
           {"build_ms", r.build_ms}, {"closed_ms", r.closed_ms}};
    j["naive"] = r.naive ? Json(r.naive->to_string()) : Json(nullptr);
    j["naive_ms"] = r.naive_ms ? Json(*r.naive_ms) : Json(nullptr);
    j["agree"] = r.naive ? Json(agree) : Json(nullptr);
    j["naive_skipped"] = r.naive_skipped ? Json(*r.naive_skipped) : Json(nullptr);
    res.out = j.dump(2) + "\n";
    return res;
  }
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "closed:    " << r.closed.to_string() << "\n";
  if (r.naive) {
    os << "naive:     " << r.naive->to_string() << "\n";
    os << "agree:     " << (agree ? "yes" : "no") << "\n";
  } else {
    os << "naive:     skipped (" << *r.naive_skipped << ")\n";
  }
  os << "method:    " << r.method << "\n";
  os << "build_ms:  " << r.build_ms << "\n";
  os << "closed_ms: " << r.closed_ms << "\n";
  if (r.naive_ms) os << "naive_ms:  " << *r.naive_ms << "\n";
  res.out = os.str();
  if (!agree) res.err = "closed form and naive summation disagree\n";
  return res;
}

CommandResult run_verify(const VerifyArgs& args) {
  require_no_latex(args.format, "verify");
  SuiteConfig config = args.config;
  if (config.max_m == 0 || config.max_r == 0 || config.max_n <= 0) throw ParseError("sweep bounds must be positive");
  config.sign_fault = args.self_test_negative;
  const auto results = run_checks(config, !args.sequential);
  CommandResult res;
  res.out = args.format == Format::kJson ? report_json(results).dump(2) + "\n" : report_text(results);
  for (const auto& r : results) {
    if (!r.pass) {
      res.exit_code = 1;
      res.err = "FAIL " + r.name + ": counterexample " + r.counterexample.dump() + "\n";
      break;
    }
  }
  return res;
}

}  // namespace psum::cli
