#include "tbcalc/numeric.hpp"

#include "tbcalc/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace tbcalc {

bool IntMatrix::is_symmetric() const
{
    if (!is_square()) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r + 1; c < cols_; ++c) {
            if ((*this)(r, c) != (*this)(c, r)) {
                return false;
            }
        }
    }
    return true;
}

IntVector IntMatrix::diagonal() const
{
    IntVector d(std::min(rows_, cols_));
    for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = (*this)(i, i);
    }
    return d;
}

IntVector IntMatrix::operator*(const IntVector& x) const
{
    IntVector y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            y[r] += (*this)(r, c) * x[c];
        }
    }
    return y;
}

std::vector<Rational> IntMatrix::operator*(const std::vector<Rational>& x) const
{
    std::vector<Rational> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if ((*this)(r, c) != 0) {
                y[r] += Rational((*this)(r, c)) * x[c];
            }
        }
    }
    return y;
}

Rational cf_eval(const std::vector<Rational>& entries)
{
    if (entries.empty()) {
        throw Error(ErrorCode::consistency_error, "continued fraction of an empty list");
    }
    Rational acc = entries.back();
    for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) {
        if (acc.is_zero()) {
            throw Error(ErrorCode::zero_denominator, "continued fraction tail evaluates to 0");
        }
        acc = *it - acc.reciprocal();
    }
    return acc;
}

Rational cf_eval(const IntVector& entries)
{
    std::vector<Rational> r(entries.begin(), entries.end());
    return cf_eval(r);
}

namespace {

// Sparse exact elimination. Rows are maps column -> value; col_rows tracks
// which active rows hold a nonzero in each column.
class SparseSystem {
public:
    explicit SparseSystem(const IntMatrix& q) : rows_(q.rows()), col_rows_(q.cols()), active_(q.rows(), true)
    {
        for (std::size_t r = 0; r < q.rows(); ++r) {
            for (std::size_t c = 0; c < q.cols(); ++c) {
                if (q(r, c) != 0) {
                    rows_[r].emplace(c, Rational(q(r, c)));
                    col_rows_[c].insert(r);
                }
            }
        }
        rhs_.assign(q.rows(), Rational(0));
    }

    void set_rhs(std::vector<Rational> rhs) { rhs_ = std::move(rhs); }

    std::size_t size() const { return rows_.size(); }

    // Full pivoting on sparsity only. Returns false when an active row is empty.
    bool choose_general(std::size_t& pr, std::size_t& pc) const
    {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        bool found = false;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!active_[r]) {
                continue;
            }
            if (rows_[r].empty()) {
                return false;
            }
            if (rows_[r].size() < best) {
                best = rows_[r].size();
                pr = r;
                found = true;
            }
        }
        if (!found) {
            return false;
        }
        std::size_t best_col = std::numeric_limits<std::size_t>::max();
        for (const auto& [c, v] : rows_[pr]) {
            if (col_rows_[c].size() < best_col) {
                best_col = col_rows_[c].size();
                pc = c;
            }
        }
        return true;
    }

    // Diagonal pivot on the active index of least degree.
    std::optional<std::size_t> choose_diagonal() const
    {
        std::optional<std::size_t> pick;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (active_[r] && rows_[r].size() < best) {
                best = rows_[r].size();
                pick = r;
            }
        }
        return pick;
    }

    Rational entry(std::size_t r, std::size_t c) const
    {
        const auto it = rows_[r].find(c);
        return it == rows_[r].end() ? Rational(0) : it->second;
    }

    void pivot(std::size_t pr, std::size_t pc)
    {
        const Rational p = rows_[pr].at(pc);
        active_[pr] = false;
        for (const auto& [c, v] : rows_[pr]) {
            col_rows_[c].erase(pr);
        }
        const std::vector<std::size_t> targets(col_rows_[pc].begin(), col_rows_[pc].end());
        for (const std::size_t r : targets) {
            const Rational f = rows_[r].at(pc) / p;
            for (const auto& [c, v] : rows_[pr]) {
                auto it = rows_[r].find(c);
                if (it == rows_[r].end()) {
                    rows_[r].emplace(c, -(f * v));
                    col_rows_[c].insert(r);
                } else {
                    it->second -= f * v;
                    if (it->second.is_zero()) {
                        rows_[r].erase(it);
                        col_rows_[c].erase(r);
                    }
                }
            }
            rhs_[r] -= f * rhs_[pr];
        }
        order_.emplace_back(pr, pc);
    }

    std::vector<Rational> back_substitute() const
    {
        std::vector<Rational> x(rows_.size());
        for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
            const auto [r, c] = *it;
            Rational acc = rhs_[r];
            for (const auto& [j, v] : rows_[r]) {
                if (j != c) {
                    acc -= v * x[j];
                }
            }
            x[c] = acc / rows_[r].at(c);
        }
        return x;
    }

    // Sign of the permutation pivot row -> pivot column.
    int permutation_sign() const
    {
        std::vector<std::size_t> perm(rows_.size());
        for (const auto& [r, c] : order_) {
            perm[r] = c;
        }
        std::vector<bool> seen(perm.size(), false);
        int sign = 1;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (seen[i]) {
                continue;
            }
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = perm[j]) {
                seen[j] = true;
                ++len;
            }
            if (len % 2 == 0) {
                sign = -sign;
            }
        }
        return sign;
    }

private:
    std::vector<std::map<std::size_t, Rational>> rows_;
    std::vector<std::set<std::size_t>> col_rows_;
    std::vector<bool> active_;
    std::vector<Rational> rhs_;
    std::vector<std::pair<std::size_t, std::size_t>> order_;
};

void require_square(const IntMatrix& q, std::size_t rhs_size)
{
    if (!q.is_square() || q.rows() != rhs_size) {
        throw Error(ErrorCode::consistency_error, "solver needs a square matrix matching the right-hand side");
    }
}

}  // namespace

std::vector<Rational> solve_rational(const IntMatrix& q, const std::vector<Rational>& rhs)
{
    require_square(q, rhs.size());
    SparseSystem sys(q);
    sys.set_rhs(rhs);
    for (std::size_t step = 0; step < sys.size(); ++step) {
        std::size_t r = 0;
        std::size_t c = 0;
        if (!sys.choose_general(r, c)) {
            throw Error(ErrorCode::singular_matrix, "intersection matrix is singular");
        }
        sys.pivot(r, c);
    }
    auto x = sys.back_substitute();
#ifndef NDEBUG
    if (q * x != rhs) {
        throw Error(ErrorCode::consistency_error, "exact solve failed re-multiplication check");
    }
#endif
    return x;
}

std::vector<Rational> solve_rational(const IntMatrix& q, const IntVector& rhs)
{
    return solve_rational(q, std::vector<Rational>(rhs.begin(), rhs.end()));
}

BigInt determinant(const IntMatrix& q)
{
    require_square(q, q.rows());
    SparseSystem sys(q);
    Rational det(1);
    for (std::size_t step = 0; step < sys.size(); ++step) {
        std::size_t r = 0;
        std::size_t c = 0;
        if (!sys.choose_general(r, c)) {
            return 0;
        }
        det *= sys.entry(r, c);
        sys.pivot(r, c);
    }
    det *= Rational(sys.permutation_sign());
    if (!det.is_integer()) {
        throw Error(ErrorCode::consistency_error, "non-integral determinant of an integer matrix");
    }
    return det.numerator();
}

bool is_negative_definite(const IntMatrix& q)
{
    if (!q.is_symmetric()) {
        return false;
    }
    SparseSystem sys(q);
    for (std::size_t step = 0; step < sys.size(); ++step) {
        const auto r = sys.choose_diagonal();
        const Rational d = sys.entry(*r, *r);
        if (d.sign() >= 0) {
            return false;
        }
        sys.pivot(*r, *r);
    }
    return true;
}

Gf2Result solve_gf2(const IntMatrix& q, const IntVector& rhs)
{
    require_square(q, rhs.size());
    const std::size_t n = q.rows();
    const std::size_t words = (n + 1 + 63) / 64;
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(words, 0));
    auto get = [&](std::size_t r, std::size_t c) { return (m[r][c / 64] >> (c % 64)) & 1U; };
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c <= n; ++c) {
            const std::int64_t v = c < n ? q(r, c) : rhs[r];
            if (v % 2 != 0) {
                m[r][c / 64] |= std::uint64_t{1} << (c % 64);
            }
        }
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < n; ++c) {
        std::size_t sel = row;
        while (sel < n && get(sel, c) == 0) {
            ++sel;
        }
        if (sel == n) {
            continue;
        }
        std::swap(m[row], m[sel]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != row && get(r, c) != 0) {
                for (std::size_t w = 0; w < words; ++w) {
                    m[r][w] ^= m[row][w];
                }
            }
        }
        pivot_col.push_back(c);
        ++row;
    }

    Gf2Result result;
    result.rank = pivot_col.size();
    for (std::size_t r = result.rank; r < n; ++r) {
        if (get(r, n) != 0) {
            result.status = Gf2Status::inconsistent;
            return result;
        }
    }
    result.solution.assign(n, 0);
    for (std::size_t r = 0; r < result.rank; ++r) {
        result.solution[pivot_col[r]] = static_cast<std::uint8_t>(get(r, n));
    }
    result.status = result.rank == n ? Gf2Status::unique : Gf2Status::non_unique;
    return result;
}

}  // namespace tbcalc
