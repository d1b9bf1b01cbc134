#include "oracles.hpp"
#include "support.hpp"

#include "tbcalc/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace tbcalc;
using support::code_of;

namespace {

std::size_t index_of(const DecoratedGraph& g, VertexId v)
{
    const auto ids = g.ids();
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
}

// 1/weight of an arm is the (first, first) entry of its inverse matrix.
Rational schur_weight(const DecoratedGraph& g, const Arm& arm)
{
    const IntMatrix q = intersection_matrix(g);
    std::vector<std::size_t> all;
    std::vector<std::size_t> rest;
    for (const VertexId v : arm.vertices) {
        all.push_back(index_of(g, v));
        if (v != arm.first) {
            rest.push_back(index_of(g, v));
        }
    }
    return Rational(oracle::bareiss_det(oracle::principal(q, all)), oracle::bareiss_det(oracle::principal(q, rest)));
}

// det Q / det(Q without e): the self-intersection of e corrected by every arm.
Rational schur_corrected(const DecoratedGraph& g, VertexId e)
{
    const IntMatrix q = intersection_matrix(g);
    std::vector<std::size_t> rest;
    std::vector<std::size_t> all;
    for (const VertexId v : g.ids()) {
        all.push_back(index_of(g, v));
        if (v != e) {
            rest.push_back(index_of(g, v));
        }
    }
    return Rational(oracle::bareiss_det(q), oracle::bareiss_det(oracle::principal(q, rest)));
}

DecoratedGraph star(std::int64_t centre, const std::vector<std::vector<std::int64_t>>& legs)
{
    DecoratedGraph g;
    VertexData d;
    d.self_int = centre;
    const VertexId c = g.add_vertex(d);
    for (const auto& leg : legs) {
        VertexId prev = c;
        for (const auto w : leg) {
            d.self_int = w;
            const VertexId v = g.add_vertex(d);
            g.add_edge(prev, v);
            prev = v;
        }
    }
    return g;
}

}  // namespace

TEST_CASE("graph mutation and validation")
{
    DecoratedGraph g;
    const VertexId a = g.add_vertex({});
    const VertexId b = g.add_vertex({});
    g.add_edge(a, b);
    CHECK(g.has_edge(b, a));
    CHECK(code_of([&] { g.add_edge(a, b); }) == ErrorCode::malformed_document);
    CHECK(code_of([&] { g.add_edge(a, a); }) == ErrorCode::malformed_document);
    CHECK(code_of([&] { g.insert_vertex(a, {}); }) == ErrorCode::malformed_document);
    g.add_arrow(a, 2);
    CHECK(g.arrow_count(a) == 2);
    CHECK(g.arrows() == std::vector<VertexId>{a, a});
    CHECK(g.is_rupture(a));
    CHECK_FALSE(g.is_rupture(b));
    CHECK(g.is_tree());
    g.remove_vertex(a);
    CHECK(g.size() == 1);
    CHECK(g.degree(b) == 0);
    CHECK(g.arrows().empty());
    // Ids are not reused.
    CHECK(g.add_vertex({}) == vid(2));
}

TEST_CASE("arm labels round-trip through text")
{
    for (const auto& text : {"rupture", "m_arm(0)", "n_arm(1)", "branch_arm(0)"}) {
        CHECK(ArmLabel::parse(text).to_string() == text);
    }
    CHECK(code_of([] { ArmLabel::parse("n_arm"); }) == ErrorCode::malformed_document);
    CHECK(code_of([] { ArmLabel::parse("n_arm(x)"); }) == ErrorCode::malformed_document);
    CHECK(code_of([] { ArmLabel::parse("leg(1)"); }) == ErrorCode::malformed_document);
}

TEST_CASE("arms and arm weights of a star")
{
    // Rupture -2 with arms (-3), (-2,-2,-2,-2,-3) twice.
    const auto g = star(-2, {{-3}, {-2, -2, -2, -2, -3}, {-2, -2, -2, -2, -3}});
    const VertexId e = vid(0);
    const auto legs = arms(g, e);
    REQUIRE(legs.size() == 3);
    std::vector<Rational> weights;
    for (const Arm& a : legs) {
        CHECK(a.bamboo);
        weights.push_back(arm_weight(g, e, a));
    }
    std::sort(weights.begin(), weights.end());
    CHECK(weights == std::vector<Rational>{Rational(-3), Rational(BigInt(-11), BigInt(9)),
                                            Rational(BigInt(-11), BigInt(9))});
    // -2 + 9/11 + 9/11 when only the two long arms count.
    const ArmFilter long_arms = [](const DecoratedGraph&, const Arm& a) { return a.vertices.size() == 5; };
    CHECK(n_prime(g, e, long_arms) == Rational(BigInt(-4), BigInt(11)));
    CHECK(n_prime(g, e, [](const DecoratedGraph&, const Arm&) { return false; }) == Rational(-2));
}

TEST_CASE("arm weight and corrected self-intersection equal Schur complements")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<std::size_t> size(2, 11);
        const auto g = oracle::random_definite_tree(rng, size(rng));
        const auto ids = g.ids();
        std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
        const VertexId e = ids[pick(rng)];
        std::size_t covered = 1;
        for (const Arm& arm : arms(g, e)) {
            covered += arm.vertices.size();
            CHECK(arm.vertices.front() == arm.first);
            CHECK(arm_weight(g, e, arm) == schur_weight(g, arm));
        }
        CHECK(covered == g.size());
        CHECK(n_prime(g, e, all_arms()) == schur_corrected(g, e));
    }
}

TEST_CASE("imaginary arm filter needs every vertex imaginary")
{
    auto g = star(-2, {{-2, -2}, {-3}});
    for (const VertexId v : g.ids()) {
        g.at(v).real = false;
    }
    g.at(vid(0)).real = true;
    g.at(vid(3)).real = true;
    const auto legs = arms(g, vid(0));
    int selected = 0;
    for (const Arm& a : legs) {
        selected += imaginary_arms()(g, a) ? 1 : 0;
    }
    CHECK(selected == 1);
    CHECK(n_prime(g, vid(0), imaginary_arms()) == Rational(-2) + Rational(BigInt(2), BigInt(3)));
}

TEST_CASE("blow-down examples")
{
    auto chain = blow_down_minimize(oracle::path_graph({-2, -1, -2}));
    REQUIRE(chain.size() == 1);
    CHECK(chain.vertices().begin()->second.self_int == 0);

    for (const std::int64_t n2 : {-3, -2, 2, 5}) {
        const auto g = blow_down_minimize(oracle::path_graph({-1, -4, -1, 2 * n2}));
        REQUIRE(g.size() == 2);
        CHECK(g.at(vid(1)).self_int == -2);
        CHECK(g.at(vid(3)).self_int == 2 * n2 + 1);
        CHECK(g.has_edge(vid(1), vid(3)));
    }

    auto fork = star(-1, {{-2}, {-2}, {-2}});
    CHECK(blow_down_minimize(fork) == fork);

    auto arrowed = oracle::path_graph({-2, -1});
    arrowed.add_arrow(vid(1));
    CHECK(blow_down_minimize(arrowed) == arrowed);

    CHECK(code_of([] { blow_down_minimize(oracle::path_graph({-1})); }) == ErrorCode::isolated_minus_one);
}

TEST_CASE("blow-down refuses to contract an imaginary curve next to a real one")
{
    auto g = oracle::path_graph({-2, -1, -2});
    g.at(vid(0)).real = true;
    g.at(vid(1)).real = false;
    g.at(vid(2)).real = false;
    CHECK(code_of([&] { blow_down_minimize(g); }) == ErrorCode::consistency_error);
}

TEST_CASE("preserve_real keeps a real (-1)-curve between imaginary curves")
{
    auto g = oracle::path_graph({-3, -1, -3});
    g.at(vid(0)).real = false;
    g.at(vid(1)).real = true;
    g.at(vid(2)).real = false;
    CHECK(blow_down_minimize(g, {BlowDownPolicy::preserve_real, std::nullopt}) == g);
    const auto complex = blow_down_minimize(g);
    CHECK(complex.size() == 2);
}

TEST_CASE("blow-down is confluent: random blow-ups of a minimal tree return to it")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> size(2, 8);
        std::uniform_int_distribution<int> ups(1, 10);
        const auto base = oracle::random_definite_tree(rng, size(rng));
        auto g = base;
        const int count = ups(rng);
        for (int i = 0; i < count; ++i) {
            oracle::random_blow_up(rng, g);
        }
        const BigInt det = abs(oracle::bareiss_det(intersection_matrix(g)));
        CHECK(det == abs(oracle::bareiss_det(intersection_matrix(base))));
        CHECK(is_negative_definite(intersection_matrix(g)));
        const std::string want = canonical_form(base);
        CHECK(canonical_form(blow_down_minimize(g)) == want);
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const auto h = blow_down_minimize(oracle::relabel(rng, g), {BlowDownPolicy::complex, rng()});
            CHECK(canonical_form(h) == want);
            CHECK(abs(determinant(intersection_matrix(h))) == det);
        }
    }
}

TEST_CASE("canonical form is an isomorphism invariant")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, 12);
        auto g = oracle::random_definite_tree(rng, size(rng));
        const auto ids = g.ids();
        std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
        g.add_arrow(ids[pick(rng)]);
        g.at(ids[pick(rng)]).arm = ArmLabel{ArmKind::n_arm, 1};
        const std::string form = canonical_form(g);
        CHECK(canonical_form(oracle::relabel(rng, g)) == form);
        auto h = g;
        h.at(ids[pick(rng)]).self_int -= 1;
        CHECK(canonical_form(h) != form);
        auto k = g;
        k.at(ids[pick(rng)]).real = true;
        CHECK(canonical_form(k) != form);
    }
    // Same degree sequence and labels, different shape.
    const auto p = oracle::path_graph({-2, -2, -2, -2, -2, -2});
    const auto s = star(-2, {{-2, -2}, {-2}, {-2, -2}});
    CHECK(canonical_form(p) != canonical_form(s));
    const auto s2 = star(-2, {{-2}, {-2, -2, -2}, {-2}});
    CHECK(canonical_form(s) != canonical_form(s2));
}

TEST_CASE("intersection matrix follows ascending ids")
{
    auto g = oracle::path_graph({-2, -3, -5});
    g.remove_vertex(vid(1));
    g.add_edge(vid(0), vid(2));
    const IntMatrix q = intersection_matrix(g);
    REQUIRE(q.rows() == 2);
    CHECK(q(0, 0) == -2);
    CHECK(q(1, 1) == -5);
    CHECK(q(0, 1) == 1);
    CHECK(q.is_symmetric());
}
