#include "psum/special_sequences.hpp"

#include <stdexcept>

namespace psum {

namespace {

const std::string kX = "x";

}  // namespace

BernoulliTable::BernoulliTable(std::size_t max_index) {
  numbers_.push_back(Rational(1));
  grow(max_index);
}

BernoulliTable::BernoulliTable(std::size_t max_index, std::size_t fault_index)
    : BernoulliTable(max_index) {
  sign_fault_ = fault_index;
}

BernoulliTable BernoulliTable::with_sign_fault(std::size_t index) { return BernoulliTable(index, index); }

void BernoulliTable::grow(std::size_t n) const {
  // sum_{k=0}^{i} C(i+1, k) B_k = 0
  while (numbers_.size() <= n) {
    const std::size_t i = numbers_.size();
    Rational acc;
    for (std::size_t k = 0; k < i; ++k) acc += Rational(binomial(static_cast<long>(i + 1), static_cast<long>(k))) * numbers_[k];
    numbers_.push_back(-acc / Rational(static_cast<long>(i + 1)));
  }
}

Rational BernoulliTable::reported(std::size_t i) const {
  return (sign_fault_ && *sign_fault_ == i) ? -numbers_[i] : numbers_[i];
}

Rational BernoulliTable::number(std::size_t n) const {
  std::lock_guard lock(mu_);
  grow(n);
  return reported(n);
}

std::vector<Rational> BernoulliTable::numbers(std::size_t max_index) const {
  std::vector<Rational> out;
  for (std::size_t n = 0; n <= max_index; ++n) out.push_back(number(n));
  return out;
}

Poly BernoulliTable::poly(std::size_t n) const {
  std::lock_guard lock(mu_);
  grow(n);
  while (polys_.size() <= n) {
    const std::size_t m = polys_.size();
    std::vector<Rational> coeffs(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
      coeffs[m - i] = Rational(binomial(static_cast<long>(m), static_cast<long>(i))) * reported(i);
    }
    polys_.emplace_back(kX, std::move(coeffs));
  }
  return polys_[n];
}

std::size_t BernoulliTable::max_index() const {
  std::lock_guard lock(mu_);
  return numbers_.size() - 1;
}

EulerTable::EulerTable(std::size_t max_index) { grow(max_index); }

void EulerTable::grow(std::size_t n) const {
  while (polys_.size() <= n) {
    const std::size_t m = polys_.size();
    Poly acc = Poly::monomial(kX, Rational(1), m);
    Poly tail(kX);
    for (std::size_t k = 0; k < m; ++k) {
      tail += polys_[k] * Rational(binomial(static_cast<long>(m), static_cast<long>(k)));
    }
    acc -= tail * Rational(1, 2);
    polys_.push_back(acc.with_variable(kX));
  }
}

Poly EulerTable::poly(std::size_t n) const {
  std::lock_guard lock(mu_);
  grow(n);
  return polys_[n];
}

Rational EulerTable::number(std::size_t n) const {
  return pow(Rational(2), static_cast<long>(n)) * poly(n)(Rational(1, 2));
}

std::vector<Rational> EulerTable::numbers(std::size_t max_index) const {
  std::vector<Rational> out;
  for (std::size_t n = 0; n <= max_index; ++n) out.push_back(number(n));
  return out;
}

std::size_t EulerTable::max_index() const {
  std::lock_guard lock(mu_);
  return polys_.size() - 1;
}

Poly central_factorial_poly(unsigned k) {
  if (k == 0) throw std::invalid_argument("central factorial needs k >= 1");
  const Poly x = Poly::identity(kX);
  return (x * falling_factorial(x + Rational(static_cast<long>(k), 2) - Rational(1), k - 1)).with_variable(kX);
}

void CentralFactorialTable::grow(unsigned m) const {
  while (rows_.size() < m) {
    const auto mm = static_cast<unsigned>(rows_.size() + 1);
    std::vector<Rational> row(mm);
    Poly residual = Poly::monomial(kX, Rational(1), mm);
    for (unsigned k = mm; k >= 1; --k) {
      const Rational t = residual.coeff(k);
      row[k - 1] = t;
      if (!t.is_zero()) residual -= central_factorial_poly(k) * t;
    }
    if (!residual.is_zero()) throw IdentityViolation("central factorial back-substitution left a remainder");
    rows_.push_back(std::move(row));
  }
}

std::vector<Rational> CentralFactorialTable::row(unsigned m) const {
  if (m == 0) throw std::invalid_argument("central factorial numbers need m >= 1");
  std::lock_guard lock(mu_);
  grow(m);
  return rows_[m - 1];
}

Rational CentralFactorialTable::at(unsigned m, unsigned k) const {
  if (k == 0 || k > m) return Rational(0);
  return row(m)[k - 1];
}

unsigned CentralFactorialTable::max_m() const {
  std::lock_guard lock(mu_);
  return static_cast<unsigned>(rows_.size());
}

const BernoulliTable& bernoulli_table() {
  static const BernoulliTable table(32);
  return table;
}

const EulerTable& euler_table() {
  static const EulerTable table(32);
  return table;
}

const CentralFactorialTable& central_factorial_table() {
  static const CentralFactorialTable table;
  return table;
}

BernoulliTable bernoulli_numbers(std::size_t max_index) { return BernoulliTable(max_index); }

Poly bernoulli_poly(std::size_t n) { return bernoulli_table().poly(n); }

Poly euler_poly(std::size_t n) { return euler_table().poly(n); }

EulerTable euler_numbers(std::size_t max_index) { return EulerTable(max_index); }

std::vector<Rational> central_factorial_numbers(unsigned m) { return central_factorial_table().row(m); }

}  // namespace psum
