// Independent reference computations for the tests. None of these call into
// the solvers they are used to check.
#pragma once

#include "tbcalc/graph.hpp"
#include "tbcalc/numeric.hpp"
#include "tbcalc/rational.hpp"

#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using tbcalc::BigInt;
using tbcalc::DecoratedGraph;
using tbcalc::IntMatrix;
using tbcalc::Rational;

// Fraction-free Bareiss elimination with row swaps.
inline BigInt bareiss_det(const IntMatrix& q)
{
    const std::size_t n = q.rows();
    if (n == 0) {
        return 1;
    }
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = static_cast<long>(q(i, j));
        }
    }
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) {
                ++r;
            }
            if (r == n) {
                return 0;
            }
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline IntMatrix principal(const IntMatrix& q, const std::vector<std::size_t>& idx)
{
    auto out = IntMatrix::square(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
            out(i, j) = q(idx[i], idx[j]);
        }
    }
    return out;
}

// Sylvester: (-1)^k det(Q_k) > 0 for every leading principal minor.
inline bool negative_definite_by_minors(const IntMatrix& q)
{
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < q.rows(); ++k) {
        idx.push_back(k);
        const BigInt d = bareiss_det(principal(q, idx));
        const int s = sgn(d);
        if (s == 0 || (idx.size() % 2 == 1 ? s > 0 : s < 0)) {
            return false;
        }
    }
    return true;
}

// |H_1| of the link of x^a + y^b + z^c from the divisor of the monodromy
// characteristic polynomial: prod (L_{a_i} - 1) with L_p L_q = gcd L_lcm,
// then Delta(1) = prod k^{c_k} when sum c_k = 0 (0 otherwise).
inline Rational brieskorn_delta_at_one(std::int64_t a, std::int64_t b, std::int64_t c)
{
    std::map<std::int64_t, BigInt> div{{1, 1}};
    for (const std::int64_t e : {a, b, c}) {
        std::map<std::int64_t, BigInt> next;
        for (const auto& [k, coef] : div) {
            const std::int64_t g = std::gcd(k, e);
            next[k / g * e] += coef * static_cast<long>(g);
            next[k] -= coef;
        }
        div = std::move(next);
    }
    BigInt total = 0;
    for (const auto& [k, coef] : div) {
        total += coef;
    }
    if (total != 0) {
        return Rational(0);
    }
    Rational out(1);
    for (const auto& [k, coef] : div) {
        BigInt p;
        mpz_pow_ui(p.get_mpz_t(), BigInt(static_cast<long>(k)).get_mpz_t(), BigInt(abs(coef)).get_ui());
        out *= coef >= 0 ? Rational(p) : Rational(p).reciprocal();
    }
    return out;
}

// Random tree on n vertices with self-intersections strictly dominating the
// degree, hence negative definite.
inline DecoratedGraph random_definite_tree(std::mt19937_64& rng, std::size_t n)
{
    DecoratedGraph g;
    std::vector<tbcalc::VertexId> ids;
    for (std::size_t i = 0; i < n; ++i) {
        ids.push_back(g.add_vertex({}));
        if (i > 0) {
            std::uniform_int_distribution<std::size_t> pick(0, i - 1);
            g.add_edge(ids[i], ids[pick(rng)]);
        }
    }
    std::uniform_int_distribution<int> extra(0, 2);
    for (const auto v : ids) {
        g.at(v).self_int = -static_cast<std::int64_t>(g.degree(v)) - 1 - extra(rng);
    }
    return g;
}

// Blow up a random point: on a vertex (new (-1)-leaf) or on an edge (new
// (-1)-vertex between its ends).
inline void random_blow_up(std::mt19937_64& rng, DecoratedGraph& g)
{
    const auto ids = g.ids();
    const auto edges = g.edges();
    std::uniform_int_distribution<int> coin(0, 1);
    tbcalc::VertexData fresh;
    fresh.self_int = -1;
    if (edges.empty() || coin(rng) == 0) {
        std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
        const auto v = ids[pick(rng)];
        const auto e = g.add_vertex(fresh);
        g.at(v).self_int -= 1;
        g.add_edge(v, e);
    } else {
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        const auto [a, b] = edges[pick(rng)];
        g.remove_edge(a, b);
        const auto e = g.add_vertex(fresh);
        g.at(a).self_int -= 1;
        g.at(b).self_int -= 1;
        g.add_edge(a, e);
        g.add_edge(b, e);
    }
}

// Same graph with ids permuted: structure checks must not depend on labels.
inline DecoratedGraph relabel(std::mt19937_64& rng, const DecoratedGraph& g)
{
    auto ids = g.ids();
    std::vector<tbcalc::VertexId> shuffled = ids;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::map<tbcalc::VertexId, tbcalc::VertexId> map;
    DecoratedGraph out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        map[shuffled[i]] = tbcalc::vid(static_cast<std::int32_t>(i));
    }
    for (const auto v : shuffled) {
        out.insert_vertex(map[v], g.at(v));
    }
    for (const auto& [a, b] : g.edges()) {
        out.add_edge(map[a], map[b]);
    }
    for (const auto v : g.arrows()) {
        out.add_arrow(map[v]);
    }
    return out;
}

inline IntMatrix path_matrix(const std::vector<std::int64_t>& weights)
{
    auto q = IntMatrix::square(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        q(i, i) = weights[i];
        if (i + 1 < weights.size()) {
            q(i, i + 1) = 1;
            q(i + 1, i) = 1;
        }
    }
    return q;
}

// E8 plumbing: three arms of lengths 1, 2, 4 at a central (-2)-vertex.
inline IntMatrix e8_matrix()
{
    auto q = IntMatrix::square(8);
    for (std::size_t i = 0; i < 8; ++i) {
        q(i, i) = -2;
    }
    const std::pair<std::size_t, std::size_t> edges[] = {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}};
    for (const auto& [a, b] : edges) {
        q(a, b) = 1;
        q(b, a) = 1;
    }
    return q;
}

inline DecoratedGraph path_graph(const std::vector<std::int64_t>& weights)
{
    DecoratedGraph g;
    std::vector<tbcalc::VertexId> ids;
    for (const auto w : weights) {
        tbcalc::VertexData d;
        d.self_int = w;
        ids.push_back(g.add_vertex(d));
    }
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
        g.add_edge(ids[i], ids[i + 1]);
    }
    return g;
}

}  // namespace oracle
