#pragma once

#include "tbcalc/cover.hpp"
#include "tbcalc/graph.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace tbcalc {

enum class WuStatus {
    /// The mod-2 system has a unique solution and it is a mod 2.
    confirmed_unique,
    /// The mod-2 system is underdetermined and a mod 2 is one of its solutions.
    confirmed_consistent,
};

/// Coefficients a_i of c1 = sum a_i E_i (so K = -c1) and the characteristic
/// set W = {a_i odd}.
struct CharacteristicData {
    std::map<VertexId, std::int64_t> a;
    std::set<VertexId> W;
    WuStatus wu_status = WuStatus::confirmed_unique;
};

/// Solves Q a = (n_i + 2) exactly, then cross-checks parity against the
/// GF(2) system Q x = diag Q. Throws Error(not_numerically_gorenstein) for a
/// non-integral coefficient and Error(wu_mismatch) if the cross-check fails.
CharacteristicData canonical_coefficients(const DecoratedGraph& g);

/// Copy of g with c1 set to the coefficients a_i.
DecoratedGraph with_c1(const DecoratedGraph& g, const CharacteristicData& cd);

/// W intersected with the real vertices of g.
std::set<VertexId> restrict_to_real(const CharacteristicData& cd, const DecoratedGraph& g);

struct ParityReport {
    std::size_t checked = 0;
    /// Preimages of odd-multiplicity curves are never in W.
    bool odd_preimages_outside_w = true;
    /// Membership in W follows the residue of m_j mod 4 and the parity of b_j.
    bool membership_law = true;
    /// m even, n odd (or the reverse): the rupture is in W iff 4 does not divide the even exponent.
    bool rupture_law = true;
    bool rupture_law_applies = false;
    std::vector<std::string> failures;

    bool ok() const { return odd_preimages_outside_w && membership_law && rupture_law; }
};

/// Parity laws on the lift before contraction, where every vertex still lies
/// over a downstairs curve with known multiplicity and b-coefficient.
ParityReport parity_checks(const BrieskornResolution& r);

}  // namespace tbcalc
