#include "fpsrev/error.hpp"

namespace fpsrev {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::LengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::ContextMismatch: return "CONTEXT_MISMATCH";
    case ErrorCode::NotDominated: return "NOT_DOMINATED";
    case ErrorCode::RankOutOfRange: return "RANK_OUT_OF_RANGE";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::NonIdentityLinearPart: return "NON_IDENTITY_LINEAR_PART";
    case ErrorCode::FormatError: return "FORMAT_ERROR";
    case ErrorCode::DuplicateTerm: return "DUPLICATE_TERM";
    case ErrorCode::DegreeOverflow: return "DEGREE_OVERFLOW";
    case ErrorCode::ConstantTerm: return "CONSTANT_TERM";
    case ErrorCode::ResourceLimit: return "RESOURCE_LIMIT";
    case ErrorCode::VerificationMismatch: return "VERIFICATION_MISMATCH";
    }
    return "UNKNOWN";
}

} // namespace fpsrev
