#include "tbcalc/verify.hpp"

#include "tbcalc/batch.hpp"
#include "tbcalc/charclass.hpp"
#include "tbcalc/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tbcalc {

std::string_view to_string(Suite s)
{
    switch (s) {
    case Suite::period:
        return "period";
    case Suite::symmetry:
        return "symmetry";
    case Suite::integrality:
        return "integrality";
    case Suite::parity:
        return "parity";
    case Suite::structure:
        return "structure";
    }
    return "period";
}

Suite parse_suite(std::string_view text)
{
    for (const auto s : {Suite::period, Suite::symmetry, Suite::integrality, Suite::parity, Suite::structure}) {
        if (text == to_string(s)) {
            return s;
        }
    }
    throw Error(ErrorCode::malformed_document, "unknown suite '" + std::string(text) + "'");
}

std::size_t VerifyReport::instances() const
{
    std::size_t total = 0;
    for (const auto& c : counts) {
        total += c.instances;
    }
    return total;
}

std::vector<std::vector<std::int64_t>> arm_sequences(const CoverGraph& g, ArmKind kind)
{
    std::vector<std::vector<std::int64_t>> out;
    if (!g.rupture) {
        return out;
    }
    for (const Arm& arm : arms(g.graph, *g.rupture)) {
        const auto& label = g.graph.at(arm.first).arm;
        if (!label || label->kind != kind) {
            continue;
        }
        std::vector<std::int64_t> seq;
        for (const VertexId v : arm.vertices) {
            seq.push_back(g.graph.at(v).self_int);
        }
        out.push_back(std::move(seq));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool fail(std::string* why, const std::string& text)
{
    if (why != nullptr) {
        *why = text;
    }
    return false;
}

DecoratedGraph shape_only(const DecoratedGraph& g)
{
    DecoratedGraph out;
    std::map<VertexId, VertexId> map;
    for (const auto& [v, d] : g.vertices()) {
        VertexData s;
        s.self_int = d.self_int;
        map[v] = out.add_vertex(s);
        if (g.arrow_count(v) > 0) {
            out.add_arrow(map[v], g.arrow_count(v));
        }
    }
    for (const auto& [a, b] : g.edges()) {
        out.add_edge(map[a], map[b]);
    }
    return out;
}

}  // namespace

bool minimal_growth_holds(const CoverGraph& small, const CoverGraph& large, std::string* why)
{
    if (!small.rupture || !large.rupture) {
        return fail(why, "rupture vertex missing");
    }
    if (small.graph.at(*small.rupture).self_int != large.graph.at(*large.rupture).self_int) {
        return fail(why, "rupture self-intersection changed");
    }
    for (const ArmKind k : {ArmKind::m_arm, ArmKind::branch_arm}) {
        if (arm_sequences(small, k) != arm_sequences(large, k)) {
            return fail(why, "an arm other than the (n)-arms changed");
        }
    }
    auto grown = arm_sequences(large, ArmKind::n_arm);
    const auto before = arm_sequences(small, ArmKind::n_arm);
    if (grown.size() != before.size() || grown.empty()) {
        return fail(why, "number of (n)-arms changed");
    }
    for (auto& seq : grown) {
        if (seq.size() < 2 || seq.back() != -2) {
            return fail(why, "grown (n)-arm does not end in a (-2)-vertex");
        }
        seq.resize(seq.size() - 2);
    }
    std::sort(grown.begin(), grown.end());
    if (grown != before) {
        return fail(why, "(n)-arm does not extend the previous one by two vertices");
    }
    return true;
}

bool embedded_growth_holds(const EmbeddedResolution& small, const EmbeddedResolution& large, std::string* why)
{
    const std::int64_t m = small.m;
    if (large.m != m) {
        return fail(why, "exponent m differs");
    }
    DecoratedGraph g = large.graph;
    std::optional<VertexId> terminal;
    for (const auto& [v, d] : g.vertices()) {
        if (g.degree(v) == 1 && g.arrow_count(v) == 0 && *d.mult == m) {
            terminal = v;
        }
    }
    if (!terminal) {
        return fail(why, "no terminal vertex of multiplicity m");
    }
    const bool expect_minus_two = m % 2 != 0 || large.n > 2 * m;
    if (expect_minus_two && g.at(*terminal).self_int != -2) {
        return fail(why, "outermost vertex is not a (-2)-vertex");
    }
    const VertexId inner = *g.neighbors(*terminal).begin();
    g.remove_vertex(*terminal);
    if (m % 2 != 0) {
        if (*g.at(inner).mult != 2 * m || g.degree(inner) != 1) {
            return fail(why, "second appended vertex does not have multiplicity 2m");
        }
        g.remove_vertex(inner);
    }
    if (canonical_form(shape_only(g)) != canonical_form(shape_only(small.graph))) {
        return fail(why, "remaining graph differs from the smaller embedded graph");
    }
    return true;
}

namespace {

class Tally {
public:
    void record(const std::string& identity, bool ok, const std::string& detail)
    {
        auto& c = entry(identity);
        ++c.instances;
        if (!ok) {
            ++c.violations;
            violations_.push_back({identity, detail});
        }
    }

    IdentityCount& entry(const std::string& identity)
    {
        for (auto& c : counts_) {
            if (c.identity == identity) {
                return c;
            }
        }
        counts_.push_back({identity, 0, 0});
        return counts_.back();
    }

    VerifyReport finish(std::size_t skipped)
    {
        VerifyReport r;
        r.counts = std::move(counts_);
        r.violations = std::move(violations_);
        r.skipped = skipped;
        return r;
    }

private:
    std::vector<IdentityCount> counts_;
    std::vector<Violation> violations_;
};

bool valid_pair(std::int64_t m, std::int64_t n)
{
    return m >= 2 && n >= 2 && std::gcd(m, n) == 1;
}

std::string pair_text(std::int64_t m, std::int64_t n)
{
    return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::string sign_text(Sign s)
{
    return s == Sign::plus ? "+" : "-";
}

// Lazily filled table of tb values; keys are requested first, then computed in one batch.
class TbTable {
public:
    void want(std::int64_t m, std::int64_t n, Sign s) { keys_.insert({m, n, s}); }

    void compute(bool parallel, int threads)
    {
        const std::vector<GridKey> keys(keys_.begin(), keys_.end());
        const auto rows = parallel ? evaluate_grid_parallel(keys, threads) : evaluate_grid_serial(keys);
        for (const auto& row : rows) {
            rows_.emplace(row.key, row);
        }
    }

    // Value or nullopt; a failed evaluation is reported once through the tally.
    std::optional<Rational> get(std::int64_t m, std::int64_t n, Sign s, Tally& tally)
    {
        const GridRow& row = rows_.at({m, n, s});
        if (!row.value && reported_.insert({m, n, s}).second) {
            tally.record("evaluation", false, "tb" + sign_text(s) + pair_text(m, n) + ": " + row.error);
        }
        return row.value;
    }

private:
    std::set<GridKey> keys_;
    std::map<GridKey, GridRow> rows_;
    std::set<GridKey> reported_;
};

struct Check {
    std::string identity;
    bool ok = true;
    std::string detail;
};

std::vector<Check> parity_for(std::int64_t m, std::int64_t n)
{
    std::vector<Check> out;
    const auto r = resolve_brieskorn(m, n, Sign::minus);
    const ParityReport rep = parity_checks(r);
    const std::string where = pair_text(m, n);
    const std::string first = rep.failures.empty() ? "" : ": " + rep.failures.front();
    out.push_back({"odd_preimages_outside_W", rep.odd_preimages_outside_w, where + first});
    out.push_back({"W_membership_law", rep.membership_law, where + first});
    if (rep.rupture_law_applies) {
        out.push_back({"rupture_in_W_iff_4_ndivides_even_exponent", rep.rupture_law, where});
    }
    return out;
}

std::vector<Check> structure_for(std::int64_t m, std::int64_t n)
{
    std::vector<Check> out;
    const std::string where = pair_text(m, n);
    const auto minus = resolve_brieskorn(m, n, Sign::minus);
    const auto plus = resolve_brieskorn(m, n, Sign::plus);
    const IntMatrix q = intersection_matrix(minus.minimal.graph);
    out.push_back({"negative_definite", is_negative_definite(q), where});
    if (m % 2 != 0 && n % 2 != 0) {
        const BigInt det = determinant(q);
        out.push_back({"unimodular_for_odd_exponents", abs(det) == 1, where + ": det " + det.get_str()});
    }
    const CharacteristicData cd = canonical_coefficients(plus.real_model.graph);
    bool invariant = true;
    for (const VertexId v : cd.W) {
        invariant = invariant && cd.W.count(plus.real_model.conj.at(v)) != 0;
    }
    out.push_back({"W_conj_invariant", invariant, where});

    const std::int64_t n1 = m % 2 != 0 ? n + 2 * m : n + m;
    std::string why;
    const auto big_f = build_gamma_f(m, n1);
    out.push_back({"embedded_growth", embedded_growth_holds(*minus.gamma_f, big_f, &why),
                   where + "->" + pair_text(m, n1) + ": " + why});

    if (std::min(m, n) >= 3) {
        const std::int64_t n2 = n + (m % 2 != 0 ? 4 * m : 2 * m);
        const auto big = resolve_brieskorn(m, n2, Sign::minus);
        why.clear();
        out.push_back({"minimal_growth", minimal_growth_holds(minus.minimal, big.minimal, &why),
                       where + "->" + pair_text(m, n2) + ": " + why});
    }
    return out;
}

void run_per_pair(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                  std::vector<Check> (*fn)(std::int64_t, std::int64_t), const VerifyConfig& cfg, Tally& tally,
                  const std::string& error_identity)
{
    std::vector<std::vector<Check>> results(pairs.size());
    auto body = [&](std::size_t i) {
        try {
            results[i] = fn(pairs[i].first, pairs[i].second);
        } catch (const std::exception& e) {
            results[i] = {{error_identity, false, pair_text(pairs[i].first, pairs[i].second) + ": " + e.what()}};
        }
    };
    if (cfg.parallel) {
        parallel_for(pairs.size(), body, cfg.threads);
    } else {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            body(i);
        }
    }
    for (const auto& checks : results) {
        for (const auto& c : checks) {
            tally.record(c.identity, c.ok, c.detail);
        }
    }
}

}  // namespace

VerifyReport verify_identities(const VerifyConfig& cfg)
{
    Tally tally;
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    std::size_t skipped = 0;
    for (std::int64_t m = 2; m <= cfg.m_max; ++m) {
        for (std::int64_t n = 2; n <= cfg.n_max; ++n) {
            if (valid_pair(m, n)) {
                pairs.emplace_back(m, n);
            } else {
                ++skipped;
            }
        }
    }
    const auto has = [&](Suite s) { return cfg.suites.count(s) != 0; };

    TbTable table;
    for (const auto& [m, n] : pairs) {
        for (const Sign s : {Sign::minus, Sign::plus}) {
            if (has(Suite::integrality) || has(Suite::symmetry) || has(Suite::period)) {
                table.want(m, n, s);
            }
            if (has(Suite::period)) {
                table.want(m, n + (m % 2 != 0 ? 4 * m : 2 * m), s);
            }
        }
    }
    if (has(Suite::symmetry)) {
        for (std::int64_t m = 2; m <= cfg.m_max; ++m) {
            for (std::int64_t k = 1; k <= cfg.k_max; ++k) {
                const std::int64_t span = (m % 2 != 0 ? 4 : 2) * k * m;
                for (std::int64_t t = 2; t <= std::min(cfg.n_max, span - 2); ++t) {
                    if (!valid_pair(m, t)) {
                        continue;
                    }
                    for (const Sign s : {Sign::minus, Sign::plus}) {
                        table.want(m, span - t, s);
                        table.want(m, t, s);
                    }
                }
            }
        }
    }
    table.compute(cfg.parallel, cfg.threads);

    if (has(Suite::integrality)) {
        for (const auto& [m, n] : pairs) {
            if (const auto v = table.get(m, n, Sign::minus, tally)) {
                tally.record("tb_minus_integral", v->is_integer(), "tb-" + pair_text(m, n) + " = " + v->to_string());
            }
            if (m % 4 == 0 && n % 2 != 0) {
                if (const auto v = table.get(m, n, Sign::plus, tally)) {
                    tally.record("tb_plus_integral_when_4_divides_m", v->is_integer(),
                                 "tb+" + pair_text(m, n) + " = " + v->to_string());
                }
            }
        }
    }

    if (has(Suite::period)) {
        for (const auto& [m, n] : pairs) {
            for (const Sign s : {Sign::minus, Sign::plus}) {
                const std::int64_t shifted = n + (m % 2 != 0 ? 4 * m : 2 * m);
                const auto a = table.get(m, n, s, tally);
                const auto b = table.get(m, shifted, s, tally);
                if (!a || !b) {
                    continue;
                }
                const std::string detail = "tb" + sign_text(s) + pair_text(m, shifted) + " = " + b->to_string() +
                                           ", tb" + sign_text(s) + pair_text(m, n) + " = " + a->to_string();
                if (m % 2 != 0) {
                    tally.record("period_m_odd", *a == *b, detail);
                } else if (m % 4 == 0) {
                    tally.record("period_4_divides_m", *a == *b, detail);
                } else {
                    const Rational expected =
                        s == Sign::minus ? Rational(4) : Rational(BigInt(4), BigInt(n * shifted));
                    tally.record("period_m_2_mod_4", *b - *a == expected, detail);
                }
            }
        }
    }

    if (has(Suite::symmetry)) {
        for (std::int64_t m = 2; m <= cfg.m_max; ++m) {
            for (std::int64_t k = 1; k <= cfg.k_max; ++k) {
                const bool m_odd = m % 2 != 0;
                const std::int64_t span = (m_odd ? 4 : 2) * k * m;
                for (std::int64_t t = 2; t <= std::min(cfg.n_max, span - 2); ++t) {
                    if (!valid_pair(m, t)) {
                        continue;
                    }
                    const std::string where = "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                              " t=" + std::to_string(t);
                    if (m_odd) {
                        for (const Sign s : {Sign::minus, Sign::plus}) {
                            const auto a = table.get(m, span - t, s, tally);
                            const auto b = table.get(m, t, s, tally);
                            if (a && b) {
                                tally.record("symmetry_m_odd", *a + *b == Rational(-2),
                                             where + " sign " + sign_text(s) + ": sum " + (*a + *b).to_string());
                            }
                        }
                    } else {
                        const auto a = table.get(m, span - t, Sign::minus, tally);
                        const auto b = table.get(m, t, Sign::minus, tally);
                        const Rational expected = m % 4 == 0 ? Rational(-4) : Rational(-4 + 4 * k);
                        if (a && b) {
                            tally.record("symmetry_m_even", *a + *b == expected,
                                         where + ": sum " + (*a + *b).to_string());
                        }
                    }
                }
            }
        }
        for (const auto& [m, n] : pairs) {
            if (m % 2 != 0 && n % 2 != 0) {
                const auto a = table.get(m, n, Sign::plus, tally);
                const auto b = table.get(m, n, Sign::minus, tally);
                if (a && b) {
                    tally.record("plus_equals_minus_for_odd_exponents", *a == *b, pair_text(m, n));
                }
            }
        }
    }

    if (has(Suite::parity)) {
        run_per_pair(pairs, &parity_for, cfg, tally, "parity_evaluation");
    }
    if (has(Suite::structure)) {
        run_per_pair(pairs, &structure_for, cfg, tally, "structure_evaluation");
    }
    return tally.finish(skipped);
}

}  // namespace tbcalc
