#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <vector>

#include "psum/polynomial.hpp"
#include "psum/rational.hpp"

namespace psum {

/// Bernoulli numbers and polynomials with the convention B_1 = -1/2, i.e. the
/// coefficients of t e^{xt} / (e^t - 1).
///
/// Grows on demand; growth is append-only and guarded by an internal mutex, so
/// a table may be shared between threads. Accessors return copies.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::size_t max_index = 1);

  /// Harness self-test: a table whose B_index has the wrong sign. Every entry
  /// computed after it uses the correct recurrence values; only the reported
  /// number (and the polynomials built from it) are corrupted.
  static BernoulliTable with_sign_fault(std::size_t index);

  Rational number(std::size_t n) const;
  /// B_n(x) = sum_i C(n, i) B_i x^{n-i}.
  Poly poly(std::size_t n) const;
  std::vector<Rational> numbers(std::size_t max_index) const;
  std::size_t max_index() const;

 private:
  BernoulliTable(std::size_t max_index, std::size_t fault_index);
  void grow(std::size_t n) const;
  Rational reported(std::size_t i) const;

  mutable std::mutex mu_;
  mutable std::vector<Rational> numbers_;
  mutable std::vector<Poly> polys_;
  std::optional<std::size_t> sign_fault_;
};

/// Euler polynomials from 2e^{xt}/(e^t + 1), built by the recurrence
/// E_n(x) = x^n - (1/2) sum_{k<n} C(n, k) E_k(x), independently of the
/// Bernoulli family. Euler numbers are E_n = 2^n E_n(1/2).
class EulerTable {
 public:
  explicit EulerTable(std::size_t max_index = 0);

  Poly poly(std::size_t n) const;
  Rational number(std::size_t n) const;
  std::vector<Rational> numbers(std::size_t max_index) const;
  std::size_t max_index() const;

 private:
  void grow(std::size_t n) const;

  mutable std::mutex mu_;
  mutable std::vector<Poly> polys_;
};

/// Central factorial numbers T(m, k), defined by x^m = sum_k T(m, k) x^[k].
class CentralFactorialTable {
 public:
  /// Row m as T(m, 1..m) (index 0 holds T(m, 1)).
  std::vector<Rational> row(unsigned m) const;
  Rational at(unsigned m, unsigned k) const;
  unsigned max_m() const;

 private:
  void grow(unsigned m) const;

  mutable std::mutex mu_;
  mutable std::vector<std::vector<Rational>> rows_;  // rows_[m - 1]
};

// Process-wide shared tables.
const BernoulliTable& bernoulli_table();
const EulerTable& euler_table();
const CentralFactorialTable& central_factorial_table();

BernoulliTable bernoulli_numbers(std::size_t max_index);
Poly bernoulli_poly(std::size_t n);
Poly euler_poly(std::size_t n);
EulerTable euler_numbers(std::size_t max_index);

/// x^[k] = x (x + k/2 - 1)_{k-1}, expanded; k >= 1.
Poly central_factorial_poly(unsigned k);

/// T(m, 1..m) by back-substitution from k = m downwards; m >= 1.
std::vector<Rational> central_factorial_numbers(unsigned m);

}  // namespace psum
