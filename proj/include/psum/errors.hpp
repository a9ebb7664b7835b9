#pragma once

#include <stdexcept>
#include <string>

namespace psum {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class VariableMismatch : public Error {
 public:
  VariableMismatch(const std::string& lhs, const std::string& rhs)
      : Error("variable mismatch: '" + lhs + "' vs '" + rhs + "'"), lhs_(lhs), rhs_(rhs) {}
  const std::string& lhs() const noexcept { return lhs_; }
  const std::string& rhs() const noexcept { return rhs_; }

 private:
  std::string lhs_;
  std::string rhs_;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& var)
      : Error("unbound variable '" + var + "'"), variable_(var) {}
  const std::string& variable() const noexcept { return variable_; }

 private:
  std::string variable_;
};

class DuplicateAbscissa : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Raised by series operations when the leading structure does not permit the
// operation (zero constant term for reciprocal, odd valuation for sqrt, ...).
class ValuationError : public Error {
 public:
  ValuationError(const std::string& what, std::size_t valuation)
      : Error(what + " (valuation " + std::to_string(valuation) + ")"), valuation_(valuation) {}
  std::size_t valuation() const noexcept { return valuation_; }

 private:
  std::size_t valuation_;
};

class TruncationError : public Error {
 public:
  using Error::Error;
};

class DegenerateProgression : public Error {
 public:
  using Error::Error;
};

// A closed form or rewrite that should be an exact identity was not.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

// structure_fit found a nonzero remainder or a degree outside the theorem's bound.
class StructureViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace psum
