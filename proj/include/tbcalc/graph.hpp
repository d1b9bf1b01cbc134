#pragma once

#include "tbcalc/numeric.hpp"
#include "tbcalc/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tbcalc {

/// Stable vertex identifier; assigned at creation and never reused within a graph.
enum class VertexId : std::int32_t {};

constexpr std::int32_t to_int(VertexId v) { return static_cast<std::int32_t>(v); }
constexpr VertexId vid(std::int32_t i) { return static_cast<VertexId>(i); }

/// branch_arm: the arm over the curve inserted between the rupture and the
/// strict transform (both exponents odd).
enum class ArmKind { rupture, m_arm, n_arm, branch_arm };

struct ArmLabel {
    ArmKind kind = ArmKind::rupture;
    int index = 0;  // m_arm(k) / n_arm(k); ignored for rupture

    std::string to_string() const;
    /// Accepts "rupture", "m_arm(k)", "n_arm(k)", "branch_arm(k)"; throws Error(malformed_document).
    static ArmLabel parse(const std::string& text);

    friend bool operator==(const ArmLabel&, const ArmLabel&) = default;
};

struct VertexData {
    std::int64_t self_int = 0;
    int genus = 0;
    std::optional<std::int64_t> mult;
    std::optional<std::int64_t> c1;
    std::optional<bool> real;
    std::optional<ArmLabel> arm;
    /// Downstairs vertex this one lies over (cover graphs only).
    std::optional<VertexId> origin;
    /// Which preimage of a doubled downstairs curve (0 or 1).
    int sheet = 0;

    friend bool operator==(const VertexData&, const VertexData&) = default;
};

/// Tree of rational curves with decorations and arrow attachments.
class DecoratedGraph {
public:
    VertexId add_vertex(const VertexData& data);
    /// For deserialization; throws Error(malformed_document) on a duplicate id.
    void insert_vertex(VertexId id, const VertexData& data);
    void remove_vertex(VertexId v);

    void add_edge(VertexId a, VertexId b);
    void remove_edge(VertexId a, VertexId b);
    bool has_edge(VertexId a, VertexId b) const;

    void add_arrow(VertexId v, int count = 1);
    void remove_arrow(VertexId v);
    int arrow_count(VertexId v) const;
    /// Arrow attachments, one entry per arrow, sorted by vertex.
    std::vector<VertexId> arrows() const;

    bool contains(VertexId v) const { return vertices_.count(v) != 0; }
    const VertexData& at(VertexId v) const;
    VertexData& at(VertexId v);

    const std::set<VertexId>& neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    /// Degree plus attached arrows is at least 3.
    bool is_rupture(VertexId v) const;

    std::size_t size() const { return vertices_.size(); }
    std::vector<VertexId> ids() const;
    std::vector<std::pair<VertexId, VertexId>> edges() const;
    const std::map<VertexId, VertexData>& vertices() const { return vertices_; }

    bool is_tree() const;
    VertexId next_id() const { return vid(next_id_); }

    /// Same vertices, decorations, edges and arrows; the id allocator is not compared.
    friend bool operator==(const DecoratedGraph& a, const DecoratedGraph& b)
    {
        return a.vertices_ == b.vertices_ && a.adjacency_ == b.adjacency_ && a.arrows_ == b.arrows_;
    }

private:
    std::map<VertexId, VertexData> vertices_;
    std::map<VertexId, std::set<VertexId>> adjacency_;
    std::map<VertexId, int> arrows_;
    std::int32_t next_id_ = 0;
};

/// Matrix of the intersection form over ids in ascending order.
IntMatrix intersection_matrix(const DecoratedGraph& g);

/// Connected component of g minus star(e).
struct Arm {
    VertexId first{};               // the neighbour of e on this arm
    std::vector<VertexId> vertices;  // breadth-first from e, closest first
    bool bamboo = true;               // no rupture vertex on the arm
};

std::vector<Arm> arms(const DecoratedGraph& g, VertexId e);

using ArmFilter = std::function<bool(const DecoratedGraph&, const Arm&)>;

/// Arms on which every vertex is marked imaginary.
ArmFilter imaginary_arms();
ArmFilter all_arms();

/// Weight of the arm: continued fraction along the path from e, stopping at
/// the first rupture vertex met, whose corrected self-intersection absorbs
/// every arm beyond it.
Rational arm_weight(const DecoratedGraph& g, VertexId e, const Arm& arm);

/// n_e - sum of 1/weight over the arms of e selected by the filter.
Rational n_prime(const DecoratedGraph& g, VertexId e, const ArmFilter& filter);

enum class BlowDownPolicy {
    complex,
    /// Keep a real (-1)-vertex whose two neighbours are both imaginary: its
    /// contraction would leave a real point as the only trace of the real part.
    preserve_real,
};

struct BlowDownOptions {
    BlowDownPolicy policy = BlowDownPolicy::complex;
    /// Randomised contraction order; default picks the smallest eligible id.
    std::optional<std::uint64_t> shuffle_seed;
};

/// Contracts (-1)-vertices of degree <= 2 without arrows until none is left.
/// Throws Error(isolated_minus_one) for an isolated (-1)-vertex and
/// Error(consistency_error) when an imaginary vertex next to a real one would
/// be contracted.
DecoratedGraph blow_down_minimize(const DecoratedGraph& g, const BlowDownOptions& options = {});

/// Complete isomorphism invariant of a decorated tree (ids ignored).
std::string canonical_form(const DecoratedGraph& g);

}  // namespace tbcalc
