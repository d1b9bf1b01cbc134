#include "tbcalc/tb.hpp"

#include "tbcalc/error.hpp"

namespace tbcalc {

namespace {

void annotation(bool ok, const std::string& what)
{
    if (!ok) {
        throw Error(ErrorCode::inconsistent_annotation, what);
    }
}

}  // namespace

TbResult tb_from_graph(const DecoratedGraph& g, const std::set<VertexId>& wr)
{
    annotation(g.is_tree(), "graph is not a tree");
    bool all_c1 = true;
    std::set<VertexId> odd_real;
    TbResult res;
    for (const auto& [v, d] : g.vertices()) {
        annotation(d.real.has_value(), "vertex " + std::to_string(to_int(v)) + " has no real mark");
        annotation(d.genus == 0, "vertex " + std::to_string(to_int(v)) + " has positive genus");
        res.N += *d.real ? 1 : 0;
        all_c1 = all_c1 && d.c1.has_value();
        if (d.c1 && *d.real && *d.c1 % 2 != 0) {
            odd_real.insert(v);
        }
    }
    for (const VertexId v : wr) {
        annotation(g.contains(v), "W_R names unknown vertex " + std::to_string(to_int(v)));
        annotation(*g.at(v).real, "W_R contains imaginary vertex " + std::to_string(to_int(v)));
    }
    if (all_c1 && g.size() > 0) {
        annotation(odd_real == wr, "W_R differs from the real vertices with odd c1");
    }

    res.value = Rational(res.N - 1);
    res.wr = wr;
    const ArmFilter imaginary = imaginary_arms();
    for (const VertexId e : wr) {
        const Rational np = n_prime(g, e, imaginary);
        res.contributions[e] = np;
        res.value += np;
        for (const Arm& arm : arms(g, e)) {
            res.arm_weights[e].push_back({arm.first, arm.vertices.size(), arm_weight(g, e, arm), imaginary(g, arm)});
        }
    }
    res.graph = g;
    return res;
}

TbResult tb_from_graph(const DecoratedGraph& g)
{
    const CharacteristicData cd = canonical_coefficients(g);
    return tb_from_graph(with_c1(g, cd), restrict_to_real(cd, g));
}

TbResult tb(std::int64_t m, std::int64_t n, Sign sign)
{
    const BrieskornResolution r = resolve_brieskorn(m, n, sign);
    const CharacteristicData cd = canonical_coefficients(r.real_model.graph);
    for (const VertexId v : cd.W) {
        if (cd.W.count(r.real_model.conj.at(v)) == 0) {
            throw Error(ErrorCode::consistency_error, "characteristic set is not conj-invariant");
        }
    }
    TbResult res = tb_from_graph(with_c1(r.real_model.graph, cd), restrict_to_real(cd, r.real_model.graph));
    res.sign = sign;
    res.m = m;
    res.n = n;
    res.rupture = r.real_model.rupture;
    return res;
}

}  // namespace tbcalc
