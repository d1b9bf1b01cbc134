#include "tbcalc/error.hpp"

namespace tbcalc {

std::string_view error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::bad_exponents: return "BadExponents";
    case ErrorCode::zero_denominator: return "ZeroDenominator";
    case ErrorCode::singular_matrix: return "SingularMatrix";
    case ErrorCode::non_integral_multiplicity: return "NonIntegralMultiplicity";
    case ErrorCode::isolated_minus_one: return "IsolatedMinusOne";
    case ErrorCode::not_numerically_gorenstein: return "NotNumericallyGorenstein";
    case ErrorCode::inconsistent_annotation: return "InconsistentAnnotation";
    case ErrorCode::non_positive_m: return "NonPositiveM";
    case ErrorCode::malformed_decomposition: return "MalformedDecomposition";
    case ErrorCode::malformed_document: return "MalformedDocument";
    case ErrorCode::odd_self_int_on_branch: return "OddSelfIntOnBranch";
    case ErrorCode::bad_odd_neighbor_count: return "BadOddNeighborCount";
    case ErrorCode::structure_mismatch: return "StructureMismatch";
    case ErrorCode::wu_mismatch: return "WuMismatch";
    case ErrorCode::consistency_error: return "ConsistencyError";
    }
    return "UnknownError";
}

bool is_input_error(ErrorCode code)
{
    switch (code) {
    case ErrorCode::odd_self_int_on_branch:
    case ErrorCode::bad_odd_neighbor_count:
    case ErrorCode::structure_mismatch:
    case ErrorCode::wu_mismatch:
    case ErrorCode::consistency_error:
        return false;
    default:
        return true;
    }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code)
{
}

}  // namespace tbcalc
