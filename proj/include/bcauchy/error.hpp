#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcauchy {

/// Every failure the library reports, grouped by the module that raises it.
enum class ErrorCode {
    // exprdsl
    SyntaxError,
    UnknownIdentifier,
    EvaluationFault,
    NotDifferentiable,
    // domain
    InvalidArgument,
    NotZeroAtOrigin,
    WrongSlopeSign,
    NotConvex,
    Condition3Violated,
    CurveNotOnBoundary,
    InitialPointOutside,
    SubstitutionFault,
    // classifier
    OutOfRange,
    AmbiguousRegion,
    NoCurvesNoRegion,
    // peano
    NoDeltaFound,
    ConstructionUnavailable,
    // euler
    PolygonExits,
    // cli
    ConfigError,
    IoError,
};

std::string_view to_string(ErrorCode code);

/// True for errors caused by malformed or inconsistent input (CLI exit status 1);
/// everything else is a construction/runtime failure (exit status 2).
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure with the zero-based character offset into the source text.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t position, const std::string& message)
        : Error(code, message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace bcauchy
