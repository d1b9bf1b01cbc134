#pragma once

#include "tbcalc/graph.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace tbcalc {

/// Division chain of the exponents, larger one first.
struct EuclidData {
    std::int64_t m = 0;  // larger exponent
    std::int64_t n = 0;  // smaller exponent
    bool swapped = false;  // caller passed the smaller exponent first
    /// q_l, ..., q_0 in the order the divisions are performed.
    std::vector<std::int64_t> quotients;
    /// Remainders r_l, ..., r_1 = 1 in the same order (the last division leaves 0).
    std::vector<std::int64_t> remainders;
    std::int64_t t = 0;  // sum of quotients = vertex count of the embedded graph
};

/// Throws Error(bad_exponents) unless m, n >= 2 and gcd(m, n) = 1.
EuclidData euclid_data(std::int64_t m, std::int64_t n);

enum class BlowupKind { euclid, separation };

struct BlowupRecord {
    VertexId vertex{};
    BlowupKind kind = BlowupKind::euclid;
    /// Exceptional curves through the centre, before the blow-up.
    std::vector<VertexId> through;
    /// Multiplicity of the strict transform at the centre (0 if it misses it).
    std::int64_t strict_mult = 0;
    std::int64_t mult = 0;
};

struct BlowupTrace {
    std::vector<BlowupRecord> records;
};

struct EmbeddedResolution {
    DecoratedGraph graph;
    BlowupTrace trace;
    EuclidData euclid;
    std::int64_t m = 0;  // caller's naming
    std::int64_t n = 0;
    VertexId rupture{};
    /// Vertices of the arm whose terminal has multiplicity m; it lifts to the (n)-arms.
    std::set<VertexId> n_arm;
    /// Vertices of the arm whose terminal has multiplicity n; it lifts to the (m)-arms.
    std::set<VertexId> m_arm;
};

/// Embedded resolution graph of x^m + y^n = 0 by infinitely-near-point
/// simulation. Every vertex carries self_int, mult and c1 (the b-coefficient);
/// one arrow sits on the rupture vertex. Post-conditions (balance law, terminal
/// and rupture multiplicities, vertex count) are checked and raise
/// Error(consistency_error) on failure.
EmbeddedResolution build_gamma_f(std::int64_t m, std::int64_t n);

/// Unique integral solution of n_k m_k + sum over neighbours m_i + arrows_k = 0,
/// in ascending id order. Throws Error(non_integral_multiplicity) or
/// Error(singular_matrix).
IntVector multiplicities(const DecoratedGraph& g);

/// b_{k+1} = -1 + sum of b over the curves through the k-th centre, one entry per record.
IntVector c1_coefficients(const BlowupTrace& trace);

/// True if every vertex satisfies the balance law with its stored multiplicity.
bool satisfies_balance(const DecoratedGraph& g);

/// Inserts a (-1)-curve at every point where two odd-multiplicity objects
/// meet (arrows count as multiplicity 1) and appends the blow-ups to the trace.
/// The n/m arm sets are extended by the inserted vertices lying on them.
EmbeddedResolution separate_odd_odd(const EmbeddedResolution& gf);

}  // namespace tbcalc
