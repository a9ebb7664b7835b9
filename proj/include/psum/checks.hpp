#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "psum/emit.hpp"
#include "psum/generating_functions.hpp"
#include "psum/rational.hpp"

namespace psum {

/// Bounds for the verification sweep. `max_r` is the largest fold count.
struct SuiteConfig {
  unsigned max_m = 6;
  unsigned max_r = 5;
  long max_n = 12;
  std::uint64_t seed = 1;
  std::vector<Rational> xs{Rational(0), Rational(1), Rational(1, 2), Rational(-3, 2), Rational(7, 3)};
  SeriesOrders orders;
  std::size_t euler_sqrt_order = 16;
  bool sign_fault = false;  // run against a Bernoulli table with B_2 negated
};

struct CheckResult {
  std::string name;
  Json params = Json::object();
  bool pass = true;
  Json counterexample;  // null when the check passed
};

struct CheckSpec {
  std::string name;
  std::function<CheckResult(const SuiteConfig&)> run;
};

/// Every check, in name order.
const std::vector<CheckSpec>& check_registry();

/// Runs one check by name; throws std::out_of_range for an unknown name. A
/// check that throws is reported as failed with the message as counterexample.
CheckResult run_check(const std::string& name, const SuiteConfig& config);

/// Runs every registered check, concurrently when `parallel` is set. The
/// result is sorted by name regardless.
std::vector<CheckResult> run_checks(const SuiteConfig& config, bool parallel = true);

/// {"checks": [{"name", "params", "pass", "counterexample"}], "all_pass": bool}
Json report_json(const std::vector<CheckResult>& results);
std::string report_text(const std::vector<CheckResult>& results);

/// B_0..B_max by the Akiyama-Tanigawa algorithm, with B_1 = -1/2.
std::vector<Rational> akiyama_tanigawa(std::size_t max_index);

}  // namespace psum
