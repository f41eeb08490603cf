// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace hexp {

enum class ErrorKind {
    SingularMatrix,
    RootCountMismatch,
    ApproximantMissing,
    PoleEvaluation,
    MultiplePole,
    InvarianceViolation,
    NotAStieltjesSequence,
    ZeroNodeAmbiguity,
    VariantUnavailable,
    NonpositiveGaussian,
    ComplexPoleRoots,
    OutsideStrip,
    StripTooNarrow,
    GridInsufficient,
    MartingaleViolated,
    InvalidArgument,
};

inline const char* error_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::SingularMatrix:        return "SingularMatrix";
        case ErrorKind::RootCountMismatch:     return "RootCountMismatch";
        case ErrorKind::ApproximantMissing:    return "ApproximantMissing";
        case ErrorKind::PoleEvaluation:        return "PoleEvaluation";
        case ErrorKind::MultiplePole:          return "MultiplePole";
        case ErrorKind::InvarianceViolation:   return "InvarianceViolation";
        case ErrorKind::NotAStieltjesSequence: return "NotAStieltjesSequence";
        case ErrorKind::ZeroNodeAmbiguity:     return "ZeroNodeAmbiguity";
        case ErrorKind::VariantUnavailable:    return "VariantUnavailable";
        case ErrorKind::NonpositiveGaussian:   return "NonpositiveGaussian";
        case ErrorKind::ComplexPoleRoots:      return "ComplexPoleRoots";
        case ErrorKind::OutsideStrip:          return "OutsideStrip";
        case ErrorKind::StripTooNarrow:        return "StripTooNarrow";
        case ErrorKind::GridInsufficient:      return "GridInsufficient";
        case ErrorKind::MartingaleViolated:    return "MartingaleViolated";
        case ErrorKind::InvalidArgument:       return "InvalidArgument";
    }
    return "UnknownError";
}

/// Numerical failure with a machine-readable kind. The CLI maps these to
/// exit code 3 and prints the kind name plus the offending parameters.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace hexp
