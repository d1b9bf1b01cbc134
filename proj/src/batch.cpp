#include "tbcalc/batch.hpp"

#include "tbcalc/tb.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace tbcalc {

int worker_count()
{
    if (const char* env = std::getenv("TBCALC_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<int>(v);
        }
    }
    return omp_get_max_threads();
}

namespace {

GridRow evaluate_one(const GridKey& key)
{
    GridRow row;
    row.key = key;
    try {
        row.value = tb(key.m, key.n, key.sign).value;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

}  // namespace

std::vector<GridRow> evaluate_grid_serial(const std::vector<GridKey>& keys)
{
    std::vector<GridRow> rows;
    rows.reserve(keys.size());
    for (const GridKey& k : keys) {
        rows.push_back(evaluate_one(k));
    }
    return rows;
}

std::vector<GridRow> evaluate_grid_parallel(const std::vector<GridKey>& keys, int threads)
{
    std::vector<GridRow> rows(keys.size());
    parallel_for(keys.size(), [&](std::size_t i) { rows[i] = evaluate_one(keys[i]); }, threads);
    return rows;
}

}  // namespace tbcalc
