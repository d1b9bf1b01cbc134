#pragma once

#include "tbcalc/cover.hpp"
#include "tbcalc/rational.hpp"

#include <compare>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

namespace tbcalc {

struct GridKey {
    std::int64_t m = 0;
    std::int64_t n = 0;
    Sign sign = Sign::minus;

    friend auto operator<=>(const GridKey&, const GridKey&) = default;
};

struct GridRow {
    GridKey key;
    std::optional<Rational> value;
    std::string error;  // set when value is empty
};

/// Worker cap: TBCALC_THREADS if set to a positive integer, else the OpenMP default.
int worker_count();

/// Reference evaluator: one tb computation after another, in key order.
std::vector<GridRow> evaluate_grid_serial(const std::vector<GridKey>& keys);

/// Same rows as the serial evaluator, computed over an OpenMP worker pool.
/// threads <= 0 means worker_count().
std::vector<GridRow> evaluate_grid_parallel(const std::vector<GridKey>& keys, int threads = 0);

/// Runs body(i) for i in [0, count) across threads (threads <= 0: worker_count()).
/// The first exception thrown by any iteration is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t count, Body&& body, int threads = 0)
{
    if (threads <= 0) {
        threads = worker_count();
    }
    std::exception_ptr failure;
    const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < total; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(tbcalc_parallel_for_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace tbcalc
