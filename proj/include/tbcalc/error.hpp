#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tbcalc {

enum class ErrorCode {
    // Caller supplied something outside the domain of the computation.
    bad_exponents,
    zero_denominator,
    singular_matrix,
    non_integral_multiplicity,
    isolated_minus_one,
    not_numerically_gorenstein,
    inconsistent_annotation,
    non_positive_m,
    malformed_decomposition,
    malformed_document,
    // Internal invariant violations; these signal a bug in the pipeline.
    odd_self_int_on_branch,
    bad_odd_neighbor_count,
    structure_mismatch,
    wu_mismatch,
    consistency_error,
};

std::string_view error_code_name(ErrorCode code);

/// True for errors caused by the input; false for internal invariant failures.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace tbcalc
