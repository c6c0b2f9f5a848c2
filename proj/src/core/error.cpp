#include "core/error.hpp"

namespace nonloc {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::AllZero: return "AllZero";
        case ErrorCode::NegativeWeight: return "NegativeWeight";
        case ErrorCode::BadWeights: return "BadWeights";
        case ErrorCode::InconsistentState: return "InconsistentState";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::BadArgument: return "BadArgument";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::DegenerateClustering: return "DegenerateClustering";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::EquivalenceViolation: return "EquivalenceViolation";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace nonloc
