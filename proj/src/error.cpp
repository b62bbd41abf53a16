#include "subpart/error.hpp"

namespace subpart {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrimePower: return "NotPrimePower";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::BadRange: return "BadRange";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::NotAPartitionOfMember: return "NotAPartitionOfMember";
        case ErrorCode::BadCut: return "BadCut";
        case ErrorCode::NotAHyperplane: return "NotAHyperplane";
        case ErrorCode::IdentityViolation: return "IdentityViolation";
        case ErrorCode::EmptySupertail: return "EmptySupertail";
        case ErrorCode::NotDisjoint: return "NotDisjoint";
        case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace subpart
