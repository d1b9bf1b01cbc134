#pragma once

#include "tbcalc/embedres.hpp"
#include "tbcalc/graph.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace tbcalc {

/// Real structure on the double cover: z -> conj(z) (plus) or z -> -conj(z) (minus).
enum class Sign { plus, minus };

std::string_view to_string(Sign s);
/// Accepts "plus" / "minus"; throws Error(malformed_document) otherwise.
Sign parse_sign(std::string_view text);

/// Resolution graph of the double cover x^m + y^n +- z^2, with provenance to
/// the separated embedded graph. Vertex origin/sheet identify the downstairs
/// curve and which of its preimages a vertex is.
struct CoverGraph {
    DecoratedGraph graph;
    std::shared_ptr<const EmbeddedResolution> downstairs;
    /// Unique preimage of the downstairs rupture, if it survives.
    std::optional<VertexId> rupture;
    /// Set once real structure is marked.
    std::optional<Sign> sign;
    /// Action of the real structure on curves; real vertices are its fixed points.
    std::map<VertexId, VertexId> conj;

    std::int64_t m() const { return downstairs->m; }
    std::int64_t n() const { return downstairs->n; }
};

/// Lifts the separated embedded graph through the double cover branched along
/// the odd-multiplicity curves and the strict transform. Throws
/// Error(odd_self_int_on_branch) or Error(bad_odd_neighbor_count).
CoverGraph lift_double_cover(std::shared_ptr<const EmbeddedResolution> separated);

/// Complex minimal model Γ(m,n): contracts (-1)-curves, identifies the rupture
/// vertex and labels arms by the downstairs side they lie over. When both
/// exponents are at least 3 the rupture is checked to survive with three
/// bamboo arms split gcd(m,2) / gcd(n,2) between the (n)- and (m)-arms;
/// otherwise Error(structure_mismatch). With an exponent 2 the rupture is
/// contracted and `rupture` is empty.
CoverGraph minimize_and_label(const CoverGraph& lifted);

/// Marks real/imaginary curves and the action of conj. Imaginary curves are
/// exactly the preimages of the downstairs arm that lifts to two arms, under
/// the plus structure with exactly one even exponent.
CoverGraph mark_real_structure(const CoverGraph& cg, Sign sign);

/// Whether real curves and conj follow the arm-level description on a
/// labelled minimal graph: everything real unless plus with one even
/// exponent, where exactly the two swapped doubled arms are imaginary.
bool real_structure_matches_arms(const CoverGraph& cg);

struct BrieskornResolution {
    std::shared_ptr<const EmbeddedResolution> gamma_f;
    std::shared_ptr<const EmbeddedResolution> separated;
    /// Lift of the separated graph before any contraction, marked.
    CoverGraph lifted;
    /// Γ(m,n), labelled and marked.
    CoverGraph minimal;
    /// Minimal model keeping the real part visible; equal to `minimal` when
    /// both exponents are at least 3. tb is evaluated on this graph.
    CoverGraph real_model;
};

BrieskornResolution resolve_brieskorn(std::int64_t m, std::int64_t n, Sign sign);

}  // namespace tbcalc
