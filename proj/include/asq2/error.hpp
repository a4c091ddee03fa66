#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asq2 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

class DivisorBudgetExceeded : public Error {
 public:
  explicit DivisorBudgetExceeded(std::size_t needed, std::size_t budget)
      : Error("divisor enumeration needs " + std::to_string(needed) +
              " candidates, budget is " + std::to_string(budget)),
        needed_(needed) {}
  std::size_t needed() const noexcept { return needed_; }

 private:
  std::size_t needed_;
};

/// A*s^2 + B*s + C = 0 with A = B = C = 0.
class IdentityEquation : public Error {
 public:
  IdentityEquation() : Error("degenerate quadratic: every element is a root") {}
};

class UnsupportedFormShape : public Error {
 public:
  using Error::Error;
};

/// A nonzero element of zero norm was met: the algebra is not a division algebra.
class NotDivision : public Error {
 public:
  using Error::Error;
};

/// The algebra context failed the division preflight.
class SplitAlgebra : public Error {
 public:
  using Error::Error;
};

class NotArtinSchreier : public Error {
 public:
  NotArtinSchreier() : Error("element is not Artin-Schreier") {}
};

class NotSquareCentral : public Error {
 public:
  NotSquareCentral() : Error("element is not square-central") {}
};

class CentralElement : public Error {
 public:
  CentralElement() : Error("element commutes with every candidate") {}
};

class DegenerateBasis : public Error {
 public:
  DegenerateBasis() : Error("basis elements are linearly dependent") {}
};

class BoxTooLarge : public Error {
 public:
  explicit BoxTooLarge(int bound)
      : Error("enumeration bound " + std::to_string(bound) + " exceeds 3") {}
};

/// An internal postcondition failed. Never expected on correct inputs.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error("syntax error at " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownSymbol : public Error {
 public:
  UnknownSymbol(const std::string& symbol, std::size_t position)
      : Error("unknown symbol '" + symbol + "' at " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace asq2
