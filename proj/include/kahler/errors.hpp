#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kahler {

enum class ErrorCode {
  // parsing / usage
  SyntaxError,
  UnknownVariable,
  InvalidLiteral,
  Usage,
  // arithmetic
  DivisionByZero,
  MixedFieldSpec,
  InvalidCharacteristic,
  MixedRing,
  AmbientMismatch,
  DimensionMismatch,
  // preconditions
  DegreeRange,
  EmptyIdeal,
  MultiGenerator,
  ZeroModulus,
  ConstantPolynomial,
  PointOffHypersurface,
  AllPartialsZero,
  // budgets
  ResourceLimit,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the polynomial and element parsers; `position` is a 0-based
/// character offset into the input text.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& what, std::size_t position)
      : Error(code, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace kahler
