#pragma once

#include <stdexcept>
#include <string>

namespace th {

enum class ErrorCode {
    DenominatorVanishes,
    IndexOutOfRange,
    RankMismatch,
    TooLarge,
    FamilyMismatch,
    NonReducedWord,
    NonGenericSlope,
    NotAdjacent,
    NonIntegralShift,
    SlopeNotInvariant,
    NotMinimalRep,
    WrongType,
    InvalidInput,
    NonIntegralExponent,
};

const char* error_name(ErrorCode c);

// All library failures that a caller may want to report go through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace th
