#pragma once

#include <stdexcept>
#include <string>

namespace limbforge {

enum class ErrorCode {
    InvalidGraph,
    NotATree,
    MissingRoot,
    UnknownVertex,
    NonzeroConstantTerm,
    BadLimbSize,
    NoRoot,
    NonPositive,
    NotACutEdge,
    TooLarge,
    HypothesisViolated,
    NoOccurrence,
    InvalidArgument,
    ReplacementDiverged,
    Internal,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace limbforge
