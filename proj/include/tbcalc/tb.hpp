#pragma once

#include "tbcalc/charclass.hpp"
#include "tbcalc/cover.hpp"
#include "tbcalc/graph.hpp"
#include "tbcalc/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace tbcalc {

struct ArmWeight {
    VertexId first{};
    std::size_t length = 0;
    Rational weight;
    bool imaginary = false;
};

/// tb = N - 1 + sum over e in W_R of n'_e, where n'_e only subtracts the
/// fully imaginary arms of e.
struct TbResult {
    Rational value;
    std::int64_t N = 0;
    std::set<VertexId> wr;
    std::map<VertexId, Rational> contributions;  // n'_e for e in wr
    std::map<VertexId, std::vector<ArmWeight>> arm_weights;  // arms of each e in wr
    std::optional<Sign> sign;
    std::int64_t m = 0;
    std::int64_t n = 0;
    /// Graph the value was evaluated on: real marks set, c1 = a_i when known.
    DecoratedGraph graph;
    std::optional<VertexId> rupture;
};

/// Full pipeline for x^m + y^n +- z^2.
TbResult tb(std::int64_t m, std::int64_t n, Sign sign);

/// Evaluates the formula on an annotated graph. Every vertex needs a real
/// mark and wr must consist of real vertices; if c1 is present on every
/// vertex, wr must equal the real vertices with odd c1. Otherwise
/// Error(inconsistent_annotation).
TbResult tb_from_graph(const DecoratedGraph& g, const std::set<VertexId>& wr);

/// Same, with W computed from the canonical class of g.
TbResult tb_from_graph(const DecoratedGraph& g);

}  // namespace tbcalc
