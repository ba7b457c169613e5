#ifndef EXTVAN_ERRORS_HPP
#define EXTVAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace extvan {

enum class ErrorCode {
    DivisionByZeroPoly,
    BothZero,
    EmptyDegrees,
    InsufficientData,
    FitContradiction,
    OverflowGuard,
    BadCommutator,
    NotAGroup,
    SemisimpleCase,
    UnsupportedAlgebra,
    NoAugmentation,
    DimensionCap,
    NotACocycle,
    RangeExceedsResolution,
    NoetherianHypothesisViolatedOnWindow,
    ConfigError,
    Internal,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case ErrorCode::BothZero: return "BothZero";
        case ErrorCode::EmptyDegrees: return "EmptyDegrees";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::FitContradiction: return "FitContradiction";
        case ErrorCode::OverflowGuard: return "OverflowGuard";
        case ErrorCode::BadCommutator: return "BadCommutator";
        case ErrorCode::NotAGroup: return "NotAGroup";
        case ErrorCode::SemisimpleCase: return "SemisimpleCase";
        case ErrorCode::UnsupportedAlgebra: return "UnsupportedAlgebra";
        case ErrorCode::NoAugmentation: return "NoAugmentation";
        case ErrorCode::DimensionCap: return "DimensionCap";
        case ErrorCode::NotACocycle: return "NotACocycle";
        case ErrorCode::RangeExceedsResolution: return "RangeExceedsResolution";
        case ErrorCode::NoetherianHypothesisViolatedOnWindow:
            return "NoetherianHypothesisViolatedOnWindow";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Invariant violations that indicate a bug in this library, not bad input.
[[noreturn]] inline void raise_internal(const std::string& what) {
    throw Error(ErrorCode::Internal, what);
}

}  // namespace extvan

#endif
