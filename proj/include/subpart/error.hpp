#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subpart {

enum class ErrorCode {
    NotPrimePower,
    Unsupported,
    DivisionByZero,
    DimensionMismatch,
    BadRange,
    BudgetExceeded,
    NotDivisible,
    NotAPartitionOfMember,
    BadCut,
    NotAHyperplane,
    IdentityViolation,
    EmptySupertail,
    NotDisjoint,
    HypothesisNotMet,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace subpart
