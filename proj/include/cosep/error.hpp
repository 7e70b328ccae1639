#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cosep {

enum class ErrorCode {
    DomainMismatch,
    DimensionMismatch,
    AlgebraMismatch,
    CoringMismatch,
    CoalgebraMismatch,
    NotWellDefined,
    NotAMorphism,
    InvalidAlgebra,
    InvalidBimodule,
    InvalidCoring,
    InvalidBicomodule,
    InvalidComodule,
    InvalidWitness,
    NotACointegration,
    NotACoderivation,
    NotCorestrictable,
    NoFactorization,
    HypothesisNotMet,
    BudgetExceeded,
    ParseError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the engine carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cosep
