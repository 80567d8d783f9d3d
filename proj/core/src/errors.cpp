#include "twisted_hecke/errors.hpp"

namespace th {

const char* error_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::FamilyMismatch: return "FamilyMismatch";
    case ErrorCode::NonReducedWord: return "NonReducedWord";
    case ErrorCode::NonGenericSlope: return "NonGenericSlope";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::NonIntegralShift: return "NonIntegralShift";
    case ErrorCode::SlopeNotInvariant: return "SlopeNotInvariant";
    case ErrorCode::NotMinimalRep: return "NotMinimalRep";
    case ErrorCode::WrongType: return "WrongType";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonIntegralExponent: return "NonIntegralExponent";
    }
    return "Unknown";
}

} // namespace th
