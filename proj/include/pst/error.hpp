#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pst {

enum class ErrorKind {
    InvalidArgument,
    RadicandMismatch,
    DivisionByZero,
    DegenerateParameters,
    NoRealSolution,
    NonPositiveCoupling,
    NonMonotoneSpectrum,
    InvariantViolation,
    ConvergenceFailure,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace pst
