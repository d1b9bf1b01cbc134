#include "tbcalc/charclass.hpp"

#include "tbcalc/error.hpp"

namespace tbcalc {

CharacteristicData canonical_coefficients(const DecoratedGraph& g)
{
    const auto ids = g.ids();
    const IntMatrix q = intersection_matrix(g);
    IntVector rhs(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        rhs[i] = g.at(ids[i]).self_int + 2;
    }
    const auto a = solve_rational(q, rhs);

    CharacteristicData cd;
    IntVector parity(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (!a[i].is_integer() || !a[i].numerator().fits_slong_p()) {
            throw Error(ErrorCode::not_numerically_gorenstein, "canonical coefficient of vertex " +
                                                                   std::to_string(to_int(ids[i])) + " is " +
                                                                   a[i].to_string());
        }
        const std::int64_t ai = a[i].numerator().get_si();
        cd.a[ids[i]] = ai;
        parity[i] = ai % 2 != 0 ? 1 : 0;
        if (parity[i] != 0) {
            cd.W.insert(ids[i]);
        }
    }

    const IntVector diag = q.diagonal();
    const Gf2Result wu = solve_gf2(q, diag);
    switch (wu.status) {
    case Gf2Status::inconsistent:
        throw Error(ErrorCode::wu_mismatch, "Wu system has no solution");
    case Gf2Status::unique:
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (wu.solution[i] != parity[i]) {
                throw Error(ErrorCode::wu_mismatch, "Wu solution differs from the canonical parity");
            }
        }
        cd.wu_status = WuStatus::confirmed_unique;
        break;
    case Gf2Status::non_unique: {
        const IntVector lhs = q * parity;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if ((lhs[i] - diag[i]) % 2 != 0) {
                throw Error(ErrorCode::wu_mismatch, "canonical parity does not satisfy the Wu system");
            }
        }
        cd.wu_status = WuStatus::confirmed_consistent;
        break;
    }
    }
    return cd;
}

DecoratedGraph with_c1(const DecoratedGraph& g, const CharacteristicData& cd)
{
    DecoratedGraph out = g;
    for (const auto& [v, a] : cd.a) {
        out.at(v).c1 = a;
    }
    return out;
}

std::set<VertexId> restrict_to_real(const CharacteristicData& cd, const DecoratedGraph& g)
{
    std::set<VertexId> out;
    for (const VertexId v : cd.W) {
        const auto& real = g.at(v).real;
        if (real.has_value() && *real) {
            out.insert(v);
        }
    }
    return out;
}

ParityReport parity_checks(const BrieskornResolution& r)
{
    ParityReport rep;
    const DecoratedGraph& up = r.lifted.graph;
    const DecoratedGraph& down = r.separated->graph;
    const CharacteristicData cd = canonical_coefficients(up);

    for (const auto& [v, d] : up.vertices()) {
        const VertexData& below = down.at(*d.origin);
        const std::int64_t mj = *below.mult;
        const std::int64_t bj = *below.c1;
        const bool in_w = cd.W.count(v) != 0;
        ++rep.checked;
        if (mj % 2 != 0 && in_w) {
            rep.odd_preimages_outside_w = false;
            rep.failures.push_back("preimage " + std::to_string(to_int(v)) + " of an odd curve lies in W");
        }
        const bool predicted = (mj % 4 == 2 && bj % 2 == 0) || (mj % 4 == 0 && bj % 2 != 0);
        if (predicted != in_w) {
            rep.membership_law = false;
            rep.failures.push_back("vertex " + std::to_string(to_int(v)) + " over a curve with m=" +
                                   std::to_string(mj) + ", b=" + std::to_string(bj) +
                                   (in_w ? " is in W" : " is not in W"));
        }
    }

    const std::int64_t m = r.gamma_f->m;
    const std::int64_t n = r.gamma_f->n;
    if ((m % 2 == 0) != (n % 2 == 0)) {
        rep.rupture_law_applies = true;
        const std::int64_t even = m % 2 == 0 ? m : n;
        const bool expected = even % 4 != 0;
        const bool actual = r.lifted.rupture && cd.W.count(*r.lifted.rupture) != 0;
        ++rep.checked;
        if (!r.lifted.rupture || expected != actual) {
            rep.rupture_law = false;
            rep.failures.push_back("rupture membership in W contradicts the residue of the even exponent");
        }
    }
    return rep;
}

}  // namespace tbcalc
