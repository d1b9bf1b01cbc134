#include "tbcalc/embedres.hpp"

#include "tbcalc/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>

namespace tbcalc {

EuclidData euclid_data(std::int64_t m, std::int64_t n)
{
    if (m < 2 || n < 2) {
        throw Error(ErrorCode::bad_exponents, "exponents must be at least 2");
    }
    if (std::gcd(m, n) != 1) {
        throw Error(ErrorCode::bad_exponents, "gcd(m,n) must be 1");
    }
    EuclidData e;
    e.swapped = m < n;
    e.m = std::max(m, n);
    e.n = std::min(m, n);
    std::int64_t a = e.m;
    std::int64_t b = e.n;
    while (b != 0) {
        e.quotients.push_back(a / b);
        const std::int64_t r = a % b;
        if (r != 0) {
            e.remainders.push_back(r);
        }
        a = b;
        b = r;
    }
    e.t = std::accumulate(e.quotients.begin(), e.quotients.end(), std::int64_t{0});
    return e;
}

namespace {

std::set<VertexId> component_from(const DecoratedGraph& g, VertexId start, VertexId blocked)
{
    std::set<VertexId> seen{start};
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (const VertexId w : g.neighbors(v)) {
            if (w != blocked && seen.insert(w).second) {
                queue.push_back(w);
            }
        }
    }
    return seen;
}

void check(bool ok, const std::string& what)
{
    if (!ok) {
        throw Error(ErrorCode::consistency_error, "embedded resolution: " + what);
    }
}

}  // namespace

EmbeddedResolution build_gamma_f(std::int64_t m, std::int64_t n)
{
    EmbeddedResolution out;
    out.euclid = euclid_data(m, n);
    out.m = m;
    out.n = n;
    DecoratedGraph& g = out.graph;

    // (p, q): local exponents of the strict transform at the next centre.
    // x_curve / y_curve: the exceptional curves through that centre playing
    // the roles of the coordinate axes.
    std::int64_t p = out.euclid.m;
    std::int64_t q = out.euclid.n;
    std::optional<VertexId> x_curve;
    std::optional<VertexId> y_curve;
    while (true) {
        BlowupRecord rec;
        rec.kind = BlowupKind::euclid;
        for (const auto& c : {x_curve, y_curve}) {
            if (c) {
                rec.through.push_back(*c);
            }
        }
        rec.strict_mult = std::min(p, q);
        rec.mult = rec.strict_mult;
        std::int64_t b = -1;
        for (const VertexId c : rec.through) {
            rec.mult += *g.at(c).mult;
            b += *g.at(c).c1;
            g.at(c).self_int -= 1;
        }
        if (rec.through.size() == 2) {
            g.remove_edge(rec.through[0], rec.through[1]);
        }
        VertexData d;
        d.self_int = -1;
        d.mult = rec.mult;
        d.c1 = b;
        rec.vertex = g.add_vertex(d);
        for (const VertexId c : rec.through) {
            g.add_edge(c, rec.vertex);
        }
        out.trace.records.push_back(rec);
        if (p == 1 && q == 1) {
            g.add_arrow(rec.vertex);
            out.rupture = rec.vertex;
            break;
        }
        if (p > q) {
            p -= q;
            x_curve = rec.vertex;
        } else {
            q -= p;
            y_curve = rec.vertex;
        }
    }

    check(g.is_tree(), "not a tree");
    check(static_cast<std::int64_t>(g.size()) == out.euclid.t, "vertex count differs from the quotient sum");
    check(g.arrows() == std::vector<VertexId>{out.rupture}, "arrow not on the last blow-up");
    check(*g.at(out.rupture).mult == m * n, "rupture multiplicity differs from mn");
    check(satisfies_balance(g), "balance law violated");
    const IntVector solved = multiplicities(g);
    const auto ids = g.ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        check(solved[i] == *g.at(ids[i]).mult, "simulated and solved multiplicities disagree");
    }

    std::multiset<std::int64_t> terminal_mults;
    for (const VertexId v : ids) {
        if (g.degree(v) == 1) {
            terminal_mults.insert(*g.at(v).mult);
        }
    }
    check(terminal_mults == std::multiset<std::int64_t>{m, n}, "terminal multiplicities differ from {m, n}");

    const auto& nb = g.neighbors(out.rupture);
    check(nb.size() == 2, "rupture vertex does not have two neighbours");
    for (const VertexId start : nb) {
        auto side = component_from(g, start, out.rupture);
        const bool holds_m = std::any_of(side.begin(), side.end(),
                                         [&](VertexId v) { return g.degree(v) == 1 && *g.at(v).mult == m; });
        (holds_m ? out.n_arm : out.m_arm) = std::move(side);
    }
    check(!out.n_arm.empty() && !out.m_arm.empty(), "arms not distinguished by terminal multiplicity");
    return out;
}

IntVector multiplicities(const DecoratedGraph& g)
{
    const IntMatrix q = intersection_matrix(g);
    const auto ids = g.ids();
    IntVector rhs(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        rhs[i] = -g.arrow_count(ids[i]);
    }
    const auto x = solve_rational(q, rhs);
    IntVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_integer() || !x[i].numerator().fits_slong_p()) {
            throw Error(ErrorCode::non_integral_multiplicity,
                        "multiplicity of vertex " + std::to_string(to_int(ids[i])) + " is " + x[i].to_string());
        }
        out[i] = x[i].numerator().get_si();
    }
    return out;
}

IntVector c1_coefficients(const BlowupTrace& trace)
{
    std::map<VertexId, std::int64_t> b;
    IntVector out;
    out.reserve(trace.records.size());
    for (const auto& rec : trace.records) {
        std::int64_t value = -1;
        for (const VertexId c : rec.through) {
            value += b.at(c);
        }
        b[rec.vertex] = value;
        out.push_back(value);
    }
    return out;
}

bool satisfies_balance(const DecoratedGraph& g)
{
    for (const auto& [v, d] : g.vertices()) {
        if (!d.mult) {
            return false;
        }
        std::int64_t sum = d.self_int * *d.mult + g.arrow_count(v);
        for (const VertexId w : g.neighbors(v)) {
            if (!g.at(w).mult) {
                return false;
            }
            sum += *g.at(w).mult;
        }
        if (sum != 0) {
            return false;
        }
    }
    return true;
}

namespace {

bool odd(std::int64_t x)
{
    return x % 2 != 0;
}

void add_to_arm_sets(EmbeddedResolution& r, VertexId a, VertexId b, VertexId inserted)
{
    for (std::set<VertexId>* side : {&r.n_arm, &r.m_arm}) {
        const bool ina = side->count(a) != 0 || a == r.rupture;
        const bool inb = side->count(b) != 0 || b == r.rupture;
        if (ina && inb && (side->count(a) != 0 || side->count(b) != 0)) {
            side->insert(inserted);
        }
    }
}

}  // namespace

EmbeddedResolution separate_odd_odd(const EmbeddedResolution& gf)
{
    EmbeddedResolution out = gf;
    DecoratedGraph& g = out.graph;
    while (true) {
        bool changed = false;
        for (const auto& [a, b] : g.edges()) {
            const VertexData& da = g.at(a);
            const VertexData& db = g.at(b);
            if (!odd(*da.mult) || !odd(*db.mult)) {
                continue;
            }
            BlowupRecord rec;
            rec.kind = BlowupKind::separation;
            rec.through = {a, b};
            rec.strict_mult = 0;
            rec.mult = *da.mult + *db.mult;
            VertexData d;
            d.self_int = -1;
            d.mult = rec.mult;
            d.c1 = -1 + *da.c1 + *db.c1;
            g.remove_edge(a, b);
            g.at(a).self_int -= 1;
            g.at(b).self_int -= 1;
            rec.vertex = g.add_vertex(d);
            g.add_edge(a, rec.vertex);
            g.add_edge(b, rec.vertex);
            add_to_arm_sets(out, a, b, rec.vertex);
            out.trace.records.push_back(rec);
            changed = true;
            break;
        }
        if (changed) {
            continue;
        }
        for (const VertexId v : g.arrows()) {
            if (!odd(*g.at(v).mult)) {
                continue;
            }
            BlowupRecord rec;
            rec.kind = BlowupKind::separation;
            rec.through = {v};
            rec.strict_mult = 1;
            rec.mult = *g.at(v).mult + 1;
            VertexData d;
            d.self_int = -1;
            d.mult = rec.mult;
            d.c1 = -1 + *g.at(v).c1;
            g.remove_arrow(v);
            g.at(v).self_int -= 1;
            rec.vertex = g.add_vertex(d);
            g.add_edge(v, rec.vertex);
            g.add_arrow(rec.vertex);
            out.trace.records.push_back(rec);
            changed = true;
            break;
        }
        if (!changed) {
            break;
        }
    }
    check(g.is_tree(), "separated graph not a tree");
    check(satisfies_balance(g), "balance law violated after separation");
    return out;
}

}  // namespace tbcalc
