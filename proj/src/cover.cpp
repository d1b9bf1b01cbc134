#include "tbcalc/cover.hpp"

#include "tbcalc/error.hpp"

#include <algorithm>

namespace tbcalc {

std::string_view to_string(Sign s)
{
    return s == Sign::plus ? "plus" : "minus";
}

Sign parse_sign(std::string_view text)
{
    if (text == "plus") {
        return Sign::plus;
    }
    if (text == "minus") {
        return Sign::minus;
    }
    throw Error(ErrorCode::malformed_document, "sign must be 'plus' or 'minus'");
}

namespace {

bool odd(std::int64_t x)
{
    return x % 2 != 0;
}

// The downstairs arm whose preimage is two arms swapped by the deck
// transformation, when exactly one exponent is even.
const std::set<VertexId>* doubled_side(const EmbeddedResolution& d)
{
    if (odd(d.m) == odd(d.n)) {
        return nullptr;
    }
    // gcd(m,2) preimages of the (n)-arm, gcd(n,2) of the (m)-arm.
    return odd(d.n) ? &d.n_arm : &d.m_arm;
}

std::optional<ArmLabel> label_for(const EmbeddedResolution& d, const VertexData& up)
{
    const VertexId o = *up.origin;
    if (o == d.rupture) {
        return ArmLabel{ArmKind::rupture, 0};
    }
    if (d.n_arm.count(o) != 0) {
        return ArmLabel{ArmKind::n_arm, up.sheet};
    }
    if (d.m_arm.count(o) != 0) {
        return ArmLabel{ArmKind::m_arm, up.sheet};
    }
    return ArmLabel{ArmKind::branch_arm, up.sheet};
}

void structure(bool ok, const std::string& what)
{
    if (!ok) {
        throw Error(ErrorCode::structure_mismatch, what);
    }
}

}  // namespace

CoverGraph lift_double_cover(std::shared_ptr<const EmbeddedResolution> separated)
{
    const DecoratedGraph& down = separated->graph;
    CoverGraph cg;
    cg.downstairs = separated;
    std::map<VertexId, std::vector<VertexId>> lifts;

    for (const auto& [v, d] : down.vertices()) {
        VertexData up;
        up.origin = v;
        if (odd(*d.mult)) {
            if (odd(d.self_int)) {
                throw Error(ErrorCode::odd_self_int_on_branch,
                            "branch curve " + std::to_string(to_int(v)) + " has odd self-intersection");
            }
            up.self_int = d.self_int / 2;
            lifts[v].push_back(cg.graph.add_vertex(up));
            continue;
        }
        int odd_neighbours = down.arrow_count(v);
        for (const VertexId w : down.neighbors(v)) {
            odd_neighbours += odd(*down.at(w).mult) ? 1 : 0;
        }
        if (odd_neighbours == 2) {
            up.self_int = 2 * d.self_int;
            lifts[v].push_back(cg.graph.add_vertex(up));
        } else if (odd_neighbours == 0) {
            up.self_int = d.self_int;
            for (int sheet = 0; sheet < 2; ++sheet) {
                up.sheet = sheet;
                lifts[v].push_back(cg.graph.add_vertex(up));
            }
        } else {
            throw Error(ErrorCode::bad_odd_neighbor_count, "even curve " + std::to_string(to_int(v)) + " meets " +
                                                               std::to_string(odd_neighbours) + " branch components");
        }
    }

    for (const auto& [a, b] : down.edges()) {
        const auto& la = lifts.at(a);
        const auto& lb = lifts.at(b);
        if (la.size() == 2 && lb.size() == 2) {
            cg.graph.add_edge(la[0], lb[0]);
            cg.graph.add_edge(la[1], lb[1]);
        } else {
            for (const VertexId x : la) {
                for (const VertexId y : lb) {
                    cg.graph.add_edge(x, y);
                }
            }
        }
    }

    const auto& ru = lifts.at(separated->rupture);
    if (ru.size() == 1) {
        cg.rupture = ru.front();
    }
    for (const auto& [v, d] : cg.graph.vertices()) {
        cg.graph.at(v).arm = label_for(*separated, d);
    }
    if (!cg.graph.is_tree()) {
        throw Error(ErrorCode::consistency_error, "lifted graph is not a tree");
    }
    return cg;
}

CoverGraph minimize_and_label(const CoverGraph& lifted)
{
    CoverGraph out = lifted;
    out.graph = blow_down_minimize(lifted.graph);
    if (out.rupture && !out.graph.contains(*out.rupture)) {
        out.rupture.reset();
    }
    for (auto it = out.conj.begin(); it != out.conj.end();) {
        it = out.graph.contains(it->first) ? std::next(it) : out.conj.erase(it);
    }

    const std::int64_t m = out.m();
    const std::int64_t n = out.n();
    if (std::min(m, n) < 3) {
        return out;
    }
    structure(out.rupture.has_value(), "rupture vertex does not survive minimisation");
    const DecoratedGraph& g = out.graph;
    const auto ar = arms(g, *out.rupture);
    structure(ar.size() == 3, "rupture vertex has " + std::to_string(ar.size()) + " arms, expected 3");
    int n_arms = 0;
    int m_arms = 0;
    for (const Arm& arm : ar) {
        structure(arm.bamboo, "arm of the rupture vertex is not a bamboo");
        const ArmLabel first = *g.at(arm.first).arm;
        for (const VertexId v : arm.vertices) {
            structure(*g.at(v).arm == first, "arm mixes preimages of different downstairs arms");
        }
        n_arms += first.kind == ArmKind::n_arm ? 1 : 0;
        m_arms += first.kind == ArmKind::m_arm ? 1 : 0;
    }
    structure(n_arms == (odd(m) ? 1 : 2), "wrong number of (n)-arms");
    structure(m_arms == (odd(n) ? 1 : 2), "wrong number of (m)-arms");
    return out;
}

CoverGraph mark_real_structure(const CoverGraph& cg, Sign sign)
{
    CoverGraph out = cg;
    out.sign = sign;
    out.conj.clear();
    const std::set<VertexId>* swapped = sign == Sign::plus ? doubled_side(*cg.downstairs) : nullptr;
    std::map<std::pair<VertexId, int>, VertexId> by_origin;
    for (const auto& [v, d] : out.graph.vertices()) {
        by_origin[{*d.origin, d.sheet}] = v;
    }
    for (const auto& [v, d] : cg.graph.vertices()) {
        const bool imaginary = swapped != nullptr && swapped->count(*d.origin) != 0;
        out.graph.at(v).real = !imaginary;
        if (!imaginary) {
            out.conj[v] = v;
            continue;
        }
        const auto partner = by_origin.find({*d.origin, 1 - d.sheet});
        if (partner == by_origin.end()) {
            throw Error(ErrorCode::consistency_error,
                        "imaginary vertex " + std::to_string(to_int(v)) + " has no conjugate");
        }
        out.conj[v] = partner->second;
    }
    for (const auto& [v, w] : out.conj) {
        const VertexData& a = out.graph.at(v);
        const VertexData& b = out.graph.at(w);
        bool ok = a.self_int == b.self_int && out.conj.at(w) == v;
        for (const VertexId x : out.graph.neighbors(v)) {
            ok = ok && out.graph.has_edge(w, out.conj.at(x));
        }
        if (!ok) {
            throw Error(ErrorCode::consistency_error, "conjugation is not a graph automorphism");
        }
    }
    return out;
}

bool real_structure_matches_arms(const CoverGraph& cg)
{
    if (!cg.sign || !cg.rupture) {
        return false;
    }
    const bool one_even = odd(cg.m()) != odd(cg.n());
    const bool expect_imaginary_pair = *cg.sign == Sign::plus && one_even;
    const ArmKind doubled = odd(cg.n()) ? ArmKind::n_arm : ArmKind::m_arm;
    std::set<int> imaginary_arm_indices;
    for (const auto& [v, d] : cg.graph.vertices()) {
        const bool imaginary_expected = expect_imaginary_pair && d.arm && d.arm->kind == doubled;
        if (*d.real == imaginary_expected) {
            return false;
        }
        if (imaginary_expected) {
            imaginary_arm_indices.insert(d.arm->index);
            const VertexData& partner = cg.graph.at(cg.conj.at(v));
            if (partner.arm->kind != doubled || partner.arm->index == d.arm->index) {
                return false;
            }
        }
    }
    return !expect_imaginary_pair || imaginary_arm_indices == std::set<int>{0, 1};
}

BrieskornResolution resolve_brieskorn(std::int64_t m, std::int64_t n, Sign sign)
{
    BrieskornResolution r;
    r.gamma_f = std::make_shared<const EmbeddedResolution>(build_gamma_f(m, n));
    r.separated = std::make_shared<const EmbeddedResolution>(separate_odd_odd(*r.gamma_f));
    const CoverGraph lifted = lift_double_cover(r.separated);
    r.lifted = mark_real_structure(lifted, sign);
    r.minimal = mark_real_structure(minimize_and_label(lifted), sign);

    r.real_model = r.lifted;
    BlowDownOptions opts;
    opts.policy = BlowDownPolicy::preserve_real;
    r.real_model.graph = blow_down_minimize(r.lifted.graph, opts);
    if (r.real_model.rupture && !r.real_model.graph.contains(*r.real_model.rupture)) {
        r.real_model.rupture.reset();
    }
    for (auto it = r.real_model.conj.begin(); it != r.real_model.conj.end();) {
        it = r.real_model.graph.contains(it->first) ? std::next(it) : r.real_model.conj.erase(it);
    }

    if (std::min(m, n) >= 3) {
        if (!(r.real_model.graph == r.minimal.graph)) {
            throw Error(ErrorCode::structure_mismatch, "real-preserving minimal model differs from the minimal graph");
        }
        if (!real_structure_matches_arms(r.minimal)) {
            throw Error(ErrorCode::structure_mismatch, "real structure disagrees with the arm description");
        }
    }
    return r;
}

}  // namespace tbcalc
