#include "limbforge/error.hpp"

namespace limbforge {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidGraph: return "InvalidGraph";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::MissingRoot: return "MissingRoot";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
        case ErrorCode::BadLimbSize: return "BadLimbSize";
        case ErrorCode::NoRoot: return "NoRoot";
        case ErrorCode::NonPositive: return "NonPositive";
        case ErrorCode::NotACutEdge: return "NotACutEdge";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::NoOccurrence: return "NoOccurrence";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ReplacementDiverged: return "ReplacementDiverged";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace limbforge
