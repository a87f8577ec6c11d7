#include "pst/error.hpp"

namespace pst {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::RadicandMismatch: return "RadicandMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::DegenerateParameters: return "DegenerateParameters";
        case ErrorKind::NoRealSolution: return "NoRealSolution";
        case ErrorKind::NonPositiveCoupling: return "NonPositiveCoupling";
        case ErrorKind::NonMonotoneSpectrum: return "NonMonotoneSpectrum";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace pst
