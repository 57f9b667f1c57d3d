#pragma once

#include <stdexcept>
#include <string>

namespace qweyl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact division left a nonzero remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// Cyclotomic level that is not an odd integer greater than one.
class BadLevel : public Error {
 public:
  using Error::Error;
};

/// Coefficients from different modes (generic q, or different roots of unity) met.
class ModeMismatch : public Error {
 public:
  using Error::Error;
};

/// A denominator that was never registered as a scalar commuter.
class UnregisteredDenominator : public Error {
 public:
  using Error::Error;
};

/// A presentation failed validation (missing rule, non-PBW relation set, ...).
class PresentationError : public Error {
 public:
  using Error::Error;
};

/// The R-matrix (or another matrix) requested for inversion is singular.
class SingularR : public Error {
 public:
  using Error::Error;
};

/// A linear ansatz had no solution.
class NoSolution : public Error {
 public:
  using Error::Error;
};

/// Classical input outside the domain (singular matrix, point off GL_2).
class SingularInput : public Error {
 public:
  using Error::Error;
};

/// A computation was requested beyond the sizes this library supports.
class ResourceBound : public Error {
 public:
  using Error::Error;
};

/// An algebra homomorphism failed to respect a defining relation.
class RelationFailure : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& symbol)
      : Error("unknown symbol '" + symbol + "'"), symbol_(symbol) {}
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

}  // namespace qweyl
