#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lsakit {

enum class Errc {
  SyntaxError,
  UnknownVariable,
  IndexOutOfRange,
  DimensionMismatch,
  NotSquare,
  NonConstantDeterminant,
  SingularMatrix,
  DegreeOverflow,
  NotLeftSymmetric,
  NotPointCase,
  InvalidDegree,
  NotARepresentation,
  NotAnAction,
  OmegaNotClosed,
  IncompatibleBracket,
  NotQuadratic,
  NotIsomorphism,
  FrameNotInKernel,
  NotAnIdeal,
  ArityError,
  NotADeformation,
  NotNijenhuis,
  SchemaError,
  IoError,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by the polynomial parser. `position` is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected);

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace lsakit
