#pragma once

#include "tbcalc/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tbcalc {

using IntVector = std::vector<std::int64_t>;

/// Dense row-major integer matrix. Intersection forms are small and sparse in
/// practice; the solvers below work on a sparse copy.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static IntMatrix square(std::size_t n) { return IntMatrix(n, n); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector diagonal() const;
    IntVector operator*(const IntVector& x) const;
    std::vector<Rational> operator*(const std::vector<Rational>& x) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Negative continued fraction e1 - 1/(e2 - 1/(... - 1/ek)), evaluated from
/// the last entry inward. Entries are ordered nearest-first relative to the
/// anchor vertex. Throws Error(zero_denominator) if a partial tail is 0.
Rational cf_eval(const std::vector<Rational>& entries);
Rational cf_eval(const IntVector& entries);

/// Exact solution of Q x = rhs. Throws Error(singular_matrix) if det Q = 0.
std::vector<Rational> solve_rational(const IntMatrix& q, const IntVector& rhs);
std::vector<Rational> solve_rational(const IntMatrix& q, const std::vector<Rational>& rhs);

/// Exact determinant.
BigInt determinant(const IntMatrix& q);

/// True iff the symmetric matrix q is negative definite. An empty matrix is
/// negative definite vacuously.
bool is_negative_definite(const IntMatrix& q);

enum class Gf2Status { unique, non_unique, inconsistent };

struct Gf2Result {
    Gf2Status status = Gf2Status::inconsistent;
    /// A particular solution when status != inconsistent (free variables set
    /// to 0); entries are 0 or 1.
    std::vector<std::uint8_t> solution;
    std::size_t rank = 0;
};

/// Gaussian elimination of Q x = rhs over GF(2); entries are reduced mod 2.
Gf2Result solve_gf2(const IntMatrix& q, const IntVector& rhs);

}  // namespace tbcalc
