#include "lsakit/error.hpp"

namespace lsakit {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::NonConstantDeterminant: return "NonConstantDeterminant";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::DegreeOverflow: return "DegreeOverflow";
    case Errc::NotLeftSymmetric: return "NotLeftSymmetric";
    case Errc::NotPointCase: return "NotPointCase";
    case Errc::InvalidDegree: return "InvalidDegree";
    case Errc::NotARepresentation: return "NotARepresentation";
    case Errc::NotAnAction: return "NotAnAction";
    case Errc::OmegaNotClosed: return "OmegaNotClosed";
    case Errc::IncompatibleBracket: return "IncompatibleBracket";
    case Errc::NotQuadratic: return "NotQuadratic";
    case Errc::NotIsomorphism: return "NotIsomorphism";
    case Errc::FrameNotInKernel: return "FrameNotInKernel";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::ArityError: return "ArityError";
    case Errc::NotADeformation: return "NotADeformation";
    case Errc::NotNijenhuis: return "NotNijenhuis";
    case Errc::SchemaError: return "SchemaError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

SyntaxError::SyntaxError(std::size_t position, std::string expected)
    : Error(Errc::SyntaxError,
            "at position " + std::to_string(position) + ": expected " + expected),
      position_(position),
      expected_(std::move(expected)) {}

}  // namespace lsakit
