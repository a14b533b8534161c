#pragma once

#include <stdexcept>
#include <string>

namespace crf {

enum class ErrorCode {
    DivisionByZero,
    PrimeMismatch,
    InsufficientPrecision,
    InvalidArgument,
    CurveInPoleLocus,
    RestrictionUndefined,
    InconsistentFractions,
    CommonZero,
    DegenerateDenominator,
    NotFound,
    ParseError,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception type for every domain failure in the library. The code lets
/// callers (and the CLI) distinguish failure kinds without string matching.
class MathError : public std::runtime_error {
  public:
    MathError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace crf
