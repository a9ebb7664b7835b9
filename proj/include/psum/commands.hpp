#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psum/checks.hpp"
#include "psum/emit.hpp"
#include "psum/rational.hpp"

// Subcommand handlers behind the psum binary. Each returns what the process
// would print and its exit status; flag parsing lives in tools/psum.cpp.
namespace psum::cli {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// "sym" or an exact rational.
std::optional<Rational> parse_x(const std::string& text);

struct FormulaArgs {
  std::optional<std::string> power;        // "odd", "2m-1" or an odd integer
  std::optional<std::string> alt_power;    // "even", "2m" or an even integer
  std::optional<std::string> progression;  // "a,b" with rational a, b
  std::optional<unsigned> m;
  std::string x = "sym";
  Format format = Format::kText;
};
CommandResult run_formula(const FormulaArgs& args);

struct SeqArgs {
  std::string kind;  // bernoulli | euler | central
  unsigned max = 10;
  Format format = Format::kText;
};
CommandResult run_seq(const SeqArgs& args);

struct RfoldArgs {
  unsigned r = 1;
  std::optional<unsigned> power;
  std::optional<unsigned> falling;
  std::optional<std::string> x;
  Format format = Format::kText;
  bool verify = false;
  long max_n = 12;
};
CommandResult run_rfold(const RfoldArgs& args);

struct AltArgs {
  unsigned r = 1;
  unsigned power = 0;
  std::optional<std::string> x;
  std::optional<std::string> n;  // decimal
  bool fit = false;
  std::string naive_ceiling = "10000000";
  Format format = Format::kText;
};
CommandResult run_alt(const AltArgs& args);

struct GfArgs {
  std::string which;  // faulhaber | alternating | euler-sqrt
  unsigned max_m = 6;
  unsigned max_k = 6;
  std::optional<std::size_t> y_order;
  std::optional<std::size_t> t_order;
  std::size_t sqrt_order = 16;
  Format format = Format::kText;
};
CommandResult run_gf(const GfArgs& args);

struct EvalArgs {
  unsigned power = 1;
  std::string n;  // decimal, arbitrary size
  unsigned r = 1;
  std::string x = "0";
  bool alternating = false;
  bool force_naive = false;  // fail instead of skipping when n is above the ceiling
  bool closed_only = false;
  std::string naive_ceiling = "10000000";
  Format format = Format::kText;
};

struct EvalReport {
  Rational closed;
  std::optional<Rational> naive;
  std::string method;
  double build_ms = 0;   // building the coefficients
  double closed_ms = 0;  // evaluating the built closed form at n
  std::optional<double> naive_ms;
  std::optional<std::string> naive_skipped;
};
/// Throws psum::Error on invalid input or when a requested naive run is refused.
EvalReport evaluate_power_sum(const EvalArgs& args);
CommandResult run_eval(const EvalArgs& args);

struct VerifyArgs {
  SuiteConfig config;
  bool self_test_negative = false;
  bool sequential = false;
  Format format = Format::kJson;
};
CommandResult run_verify(const VerifyArgs& args);

}  // namespace psum::cli
