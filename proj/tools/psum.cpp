#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "psum/commands.hpp"
#include "psum/errors.hpp"

using namespace psum;

namespace {

const std::vector<std::string> kFormats{"latex", "json", "text"};

CLI::Option* add_format(CLI::App* app, std::string& target, const std::string& name = "--format") {
  return app->add_option(name, target, "Output format")->check(CLI::IsMember(kFormats))->capture_default_str();
}

int emit(const cli::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact power-sum formulas: emit, evaluate and verify"};
  app.require_subcommand(1);

  // formula
  auto* formula = app.add_subcommand("formula", "Emit a lambda-expansion or progression power sum");
  cli::FormulaArgs fa;
  std::string fa_format = "text";
  std::string fa_power, fa_alt, fa_prog;
  unsigned fa_m = 0;
  auto* fa_power_opt = formula->add_option("--power", fa_power, "odd | 2m-1 | an odd integer");
  auto* fa_alt_opt = formula->add_option("--alt-power", fa_alt, "even | 2m | an even integer");
  auto* fa_prog_opt = formula->add_option("--progression", fa_prog, "a,b for the terms a + i b (rationals p/q)");
  auto* fa_m_opt = formula->add_option("--m", fa_m, "Index m");
  formula->add_option("--x", fa.x, "Shift p/q, or sym for symbolic x")->capture_default_str();
  add_format(formula, fa_format);

  // seq
  auto* seq = app.add_subcommand("seq", "Dump Bernoulli, Euler or central factorial tables");
  cli::SeqArgs sa;
  std::string sa_format = "text";
  seq->add_option("--kind", sa.kind, "bernoulli | euler | central")->required()->check(CLI::IsMember({"bernoulli", "euler", "central"}));
  seq->add_option("--max", sa.max, "Largest index")->capture_default_str();
  add_format(seq, sa_format);

  // rfold
  auto* rfold = app.add_subcommand("rfold", "Closed form of an r-fold power or falling-factorial sum");
  cli::RfoldArgs ra;
  std::string ra_format = "text";
  std::string ra_x;
  unsigned ra_power = 0, ra_falling = 0;
  rfold->add_option("--r", ra.r, "Fold count")->required();
  auto* ra_power_opt = rfold->add_option("--power", ra_power, "Exponent of (x+n)");
  auto* ra_falling_opt = rfold->add_option("--falling", ra_falling, "Length l of the falling factorial (x+n)_l");
  auto* ra_x_opt = rfold->add_option("--x", ra_x, "Shift p/q (default symbolic)");
  add_format(rfold, ra_format, "--emit,--format");
  rfold->add_flag("--verify", ra.verify, "Compare against brute force");
  rfold->add_option("--max-n", ra.max_n, "Largest n for --verify")->capture_default_str()->check(CLI::PositiveNumber);

  // alt
  auto* alt = app.add_subcommand("alt", "Alternating r-fold sums of (-1)^n (x+n)^m");
  cli::AltArgs aa;
  std::string aa_format = "text";
  std::string aa_x, aa_n;
  alt->add_option("--r", aa.r, "Fold count")->required();
  alt->add_option("--power", aa.power, "Exponent m")->required();
  auto* aa_x_opt = alt->add_option("--x", aa_x, "Shift p/q (default 0)");
  auto* aa_n_opt = alt->add_option("--n", aa_n, "Evaluate at this n (decimal)");
  auto* aa_fit_opt = alt->add_flag("--fit", aa.fit, "Fit the (-1)^n F(nu) + G(nu) structure at x = 0");
  aa_n_opt->excludes(aa_fit_opt);
  alt->add_option("--naive-ceiling", aa.naive_ceiling, "Skip brute force above this n")->capture_default_str();
  add_format(alt, aa_format);

  // gf
  auto* gf = app.add_subcommand("gf", "Generating-function checks");
  cli::GfArgs ga;
  std::string ga_format = "text";
  std::size_t ga_y = 0, ga_t = 0;
  gf->add_option("--which", ga.which, "faulhaber | alternating | euler-sqrt")->required()->check(CLI::IsMember({"faulhaber", "alternating", "euler-sqrt"}));
  gf->add_option("--max-m", ga.max_m, "Grid bound in m")->capture_default_str();
  gf->add_option("--max-k", ga.max_k, "Grid bound in k")->capture_default_str();
  auto* ga_y_opt = gf->add_option("--y-order", ga_y, "Truncation order in y");
  auto* ga_t_opt = gf->add_option("--t-order", ga_t, "Truncation order in t");
  gf->add_option("--order", ga.sqrt_order, "t-order for euler-sqrt")->capture_default_str()->check(CLI::PositiveNumber);
  add_format(gf, ga_format);

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a closed form at a big n, optionally against naive summation");
  cli::EvalArgs ea;
  std::string ea_format = "text";
  eval->add_option("--power", ea.power, "Exponent")->required();
  eval->add_option("--n", ea.n, "Upper limit (decimal, any size)")->required();
  eval->add_option("--r", ea.r, "Fold count")->capture_default_str();
  eval->add_option("--x", ea.x, "Shift p/q")->capture_default_str();
  eval->add_flag("--alternating", ea.alternating, "Sum (-1)^i (x+i)^power instead");
  eval->add_flag("--naive", ea.force_naive, "Require the naive summation (error above the ceiling)");
  eval->add_flag("--closed-only", ea.closed_only, "Skip the naive summation");
  eval->add_option("--naive-ceiling", ea.naive_ceiling, "Largest n for naive summation")->capture_default_str();
  add_format(eval, ea_format);

  // verify
  auto* verify = app.add_subcommand("verify", "Run every oracle and identity check");
  cli::VerifyArgs va;
  std::string va_format = "json";
  std::vector<std::string> va_xs;
  verify->add_option("--max-m", va.config.max_m, "Bound on m")->envname("PSUM_MAX_M")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--max-r", va.config.max_r, "Bound on the fold count")->envname("PSUM_MAX_R")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--max-n", va.config.max_n, "Bound on n")->envname("PSUM_MAX_N")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--seed", va.config.seed, "Seed for sampled property checks")->envname("PSUM_SEED")->capture_default_str();
  verify->add_option("--x", va_xs, "Shift p/q; repeat for several (default 0, 1, 1/2, -3/2, 7/3)");
  verify->add_flag("--self-test-negative", va.self_test_negative, "Flip the sign of B_2 and expect failures");
  verify->add_flag("--sequential", va.sequential, "Run checks on one thread");
  add_format(verify, va_format);

  CLI11_PARSE(app, argc, argv);

  try {
    if (formula->parsed()) {
      if (*fa_power_opt) fa.power = fa_power;
      if (*fa_alt_opt) fa.alt_power = fa_alt;
      if (*fa_prog_opt) fa.progression = fa_prog;
      if (*fa_m_opt) fa.m = fa_m;
      fa.format = parse_format(fa_format);
      return emit(cli::run_formula(fa));
    }
    if (seq->parsed()) {
      sa.format = parse_format(sa_format);
      return emit(cli::run_seq(sa));
    }
    if (rfold->parsed()) {
      if (*ra_power_opt) ra.power = ra_power;
      if (*ra_falling_opt) ra.falling = ra_falling;
      if (*ra_x_opt) ra.x = ra_x;
      ra.format = parse_format(ra_format);
      return emit(cli::run_rfold(ra));
    }
    if (alt->parsed()) {
      if (*aa_x_opt) aa.x = aa_x;
      if (*aa_n_opt) aa.n = aa_n;
      aa.format = parse_format(aa_format);
      return emit(cli::run_alt(aa));
    }
    if (gf->parsed()) {
      if (*ga_y_opt) ga.y_order = ga_y;
      if (*ga_t_opt) ga.t_order = ga_t;
      ga.format = parse_format(ga_format);
      return emit(cli::run_gf(ga));
    }
    if (eval->parsed()) {
      ea.format = parse_format(ea_format);
      return emit(cli::run_eval(ea));
    }
    if (verify->parsed()) {
      if (!va_xs.empty()) {
        va.config.xs.clear();
        for (const auto& x : va_xs) va.config.xs.push_back(Rational::parse(x));
      }
      va.format = parse_format(va_format);
      return emit(cli::run_verify(va));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
