#include "tbcalc/graph.hpp"

#include "tbcalc/error.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

namespace tbcalc {

std::string ArmLabel::to_string() const
{
    switch (kind) {
    case ArmKind::rupture:
        return "rupture";
    case ArmKind::m_arm:
        return "m_arm(" + std::to_string(index) + ")";
    case ArmKind::n_arm:
        return "n_arm(" + std::to_string(index) + ")";
    case ArmKind::branch_arm:
        return "branch_arm(" + std::to_string(index) + ")";
    }
    return "rupture";
}

ArmLabel ArmLabel::parse(const std::string& text)
{
    if (text == "rupture") {
        return {ArmKind::rupture, 0};
    }
    for (const auto& [prefix, kind] : {std::pair{"m_arm(", ArmKind::m_arm}, std::pair{"n_arm(", ArmKind::n_arm},
                                       std::pair{"branch_arm(", ArmKind::branch_arm}}) {
        const std::string p = prefix;
        if (text.size() > p.size() + 1 && text.compare(0, p.size(), p) == 0 && text.back() == ')') {
            const std::string digits = text.substr(p.size(), text.size() - p.size() - 1);
            if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
                return {kind, std::stoi(digits)};
            }
        }
    }
    throw Error(ErrorCode::malformed_document, "unknown arm label '" + text + "'");
}

VertexId DecoratedGraph::add_vertex(const VertexData& data)
{
    const VertexId id = vid(next_id_++);
    vertices_.emplace(id, data);
    adjacency_[id];
    return id;
}

void DecoratedGraph::insert_vertex(VertexId id, const VertexData& data)
{
    if (vertices_.count(id) != 0) {
        throw Error(ErrorCode::malformed_document, "duplicate vertex id " + std::to_string(to_int(id)));
    }
    if (to_int(id) < 0) {
        throw Error(ErrorCode::malformed_document, "negative vertex id");
    }
    vertices_.emplace(id, data);
    adjacency_[id];
    next_id_ = std::max(next_id_, to_int(id) + 1);
}

void DecoratedGraph::remove_vertex(VertexId v)
{
    for (const VertexId w : neighbors(v)) {
        adjacency_[w].erase(v);
    }
    adjacency_.erase(v);
    arrows_.erase(v);
    vertices_.erase(v);
}

void DecoratedGraph::add_edge(VertexId a, VertexId b)
{
    if (a == b || !contains(a) || !contains(b)) {
        throw Error(ErrorCode::malformed_document, "edge between unknown or identical vertices");
    }
    if (has_edge(a, b)) {
        throw Error(ErrorCode::malformed_document, "more than one edge between a pair of vertices");
    }
    adjacency_[a].insert(b);
    adjacency_[b].insert(a);
}

void DecoratedGraph::remove_edge(VertexId a, VertexId b)
{
    adjacency_[a].erase(b);
    adjacency_[b].erase(a);
}

bool DecoratedGraph::has_edge(VertexId a, VertexId b) const
{
    const auto it = adjacency_.find(a);
    return it != adjacency_.end() && it->second.count(b) != 0;
}

void DecoratedGraph::add_arrow(VertexId v, int count)
{
    if (!contains(v)) {
        throw Error(ErrorCode::malformed_document, "arrow on unknown vertex");
    }
    arrows_[v] += count;
}

void DecoratedGraph::remove_arrow(VertexId v)
{
    auto it = arrows_.find(v);
    if (it != arrows_.end() && --it->second == 0) {
        arrows_.erase(it);
    }
}

int DecoratedGraph::arrow_count(VertexId v) const
{
    const auto it = arrows_.find(v);
    return it == arrows_.end() ? 0 : it->second;
}

std::vector<VertexId> DecoratedGraph::arrows() const
{
    std::vector<VertexId> out;
    for (const auto& [v, k] : arrows_) {
        out.insert(out.end(), static_cast<std::size_t>(k), v);
    }
    return out;
}

const VertexData& DecoratedGraph::at(VertexId v) const
{
    const auto it = vertices_.find(v);
    if (it == vertices_.end()) {
        throw Error(ErrorCode::consistency_error, "unknown vertex " + std::to_string(to_int(v)));
    }
    return it->second;
}

VertexData& DecoratedGraph::at(VertexId v)
{
    return const_cast<VertexData&>(std::as_const(*this).at(v));
}

const std::set<VertexId>& DecoratedGraph::neighbors(VertexId v) const
{
    const auto it = adjacency_.find(v);
    if (it == adjacency_.end()) {
        throw Error(ErrorCode::consistency_error, "unknown vertex " + std::to_string(to_int(v)));
    }
    return it->second;
}

bool DecoratedGraph::is_rupture(VertexId v) const
{
    return degree(v) + static_cast<std::size_t>(arrow_count(v)) >= 3;
}

std::vector<VertexId> DecoratedGraph::ids() const
{
    std::vector<VertexId> out;
    out.reserve(vertices_.size());
    for (const auto& [v, d] : vertices_) {
        out.push_back(v);
    }
    return out;
}

std::vector<std::pair<VertexId, VertexId>> DecoratedGraph::edges() const
{
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const auto& [a, nb] : adjacency_) {
        for (const VertexId b : nb) {
            if (a < b) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

bool DecoratedGraph::is_tree() const
{
    if (vertices_.empty()) {
        return true;
    }
    if (edges().size() + 1 != vertices_.size()) {
        return false;
    }
    std::set<VertexId> seen{vertices_.begin()->first};
    std::deque<VertexId> queue{vertices_.begin()->first};
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (const VertexId w : neighbors(v)) {
            if (seen.insert(w).second) {
                queue.push_back(w);
            }
        }
    }
    return seen.size() == vertices_.size();
}

IntMatrix intersection_matrix(const DecoratedGraph& g)
{
    const auto ids = g.ids();
    std::map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        index[ids[i]] = i;
    }
    auto q = IntMatrix::square(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        q(i, i) = g.at(ids[i]).self_int;
        for (const VertexId w : g.neighbors(ids[i])) {
            q(i, index.at(w)) = 1;
        }
    }
    return q;
}

std::vector<Arm> arms(const DecoratedGraph& g, VertexId e)
{
    std::vector<Arm> out;
    for (const VertexId start : g.neighbors(e)) {
        Arm arm;
        arm.first = start;
        std::set<VertexId> seen{e, start};
        std::deque<VertexId> queue{start};
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            arm.vertices.push_back(v);
            if (g.degree(v) >= 3) {
                arm.bamboo = false;
            }
            for (const VertexId w : g.neighbors(v)) {
                if (seen.insert(w).second) {
                    queue.push_back(w);
                }
            }
        }
        out.push_back(std::move(arm));
    }
    return out;
}

ArmFilter imaginary_arms()
{
    return [](const DecoratedGraph& g, const Arm& arm) {
        return std::all_of(arm.vertices.begin(), arm.vertices.end(), [&](VertexId v) {
            const auto& real = g.at(v).real;
            return real.has_value() && !*real;
        });
    };
}

ArmFilter all_arms()
{
    return [](const DecoratedGraph&, const Arm&) { return true; };
}

namespace {

// Corrected self-intersection of a rupture vertex reached from `from`: every
// arm pointing away from it is absorbed.
Rational absorb_beyond(const DecoratedGraph& g, VertexId v, VertexId from)
{
    Rational value(g.at(v).self_int);
    for (const Arm& sub : arms(g, v)) {
        if (sub.first != from) {
            value -= arm_weight(g, v, sub).reciprocal();
        }
    }
    return value;
}

}  // namespace

Rational arm_weight(const DecoratedGraph& g, VertexId e, const Arm& arm)
{
    std::vector<Rational> entries;
    VertexId prev = e;
    VertexId cur = arm.first;
    while (true) {
        if (g.degree(cur) >= 3) {
            entries.push_back(absorb_beyond(g, cur, prev));
            break;
        }
        entries.emplace_back(g.at(cur).self_int);
        std::optional<VertexId> next;
        for (const VertexId w : g.neighbors(cur)) {
            if (w != prev) {
                next = w;
            }
        }
        if (!next) {
            break;
        }
        prev = cur;
        cur = *next;
    }
    return cf_eval(entries);
}

Rational n_prime(const DecoratedGraph& g, VertexId e, const ArmFilter& filter)
{
    Rational value(g.at(e).self_int);
    for (const Arm& arm : arms(g, e)) {
        if (filter(g, arm)) {
            value -= arm_weight(g, e, arm).reciprocal();
        }
    }
    return value;
}

namespace {

bool is_imaginary(const VertexData& d)
{
    return d.real.has_value() && !*d.real;
}

bool is_real(const VertexData& d)
{
    return d.real.has_value() && *d.real;
}

std::vector<VertexId> contractible(const DecoratedGraph& g, BlowDownPolicy policy)
{
    std::vector<VertexId> out;
    for (const auto& [v, d] : g.vertices()) {
        if (d.self_int != -1 || g.degree(v) > 2 || g.arrow_count(v) > 0) {
            continue;
        }
        if (policy == BlowDownPolicy::preserve_real && g.degree(v) == 2 && is_real(d)) {
            const auto& nb = g.neighbors(v);
            if (std::all_of(nb.begin(), nb.end(), [&](VertexId w) { return is_imaginary(g.at(w)); })) {
                continue;
            }
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace

DecoratedGraph blow_down_minimize(const DecoratedGraph& g, const BlowDownOptions& options)
{
    DecoratedGraph h = g;
    std::optional<std::mt19937_64> rng;
    if (options.shuffle_seed) {
        rng.emplace(*options.shuffle_seed);
    }
    while (true) {
        const auto cand = contractible(h, options.policy);
        if (cand.empty()) {
            return h;
        }
        VertexId v = cand.front();
        if (rng) {
            std::uniform_int_distribution<std::size_t> pick(0, cand.size() - 1);
            v = cand[pick(*rng)];
        }
        const std::vector<VertexId> nb(h.neighbors(v).begin(), h.neighbors(v).end());
        if (nb.empty()) {
            throw Error(ErrorCode::isolated_minus_one,
                        "isolated (-1)-vertex " + std::to_string(to_int(v)) + " contracts to a smooth point");
        }
        if (is_imaginary(h.at(v))) {
            for (const VertexId w : nb) {
                if (is_real(h.at(w))) {
                    throw Error(ErrorCode::consistency_error, "contracting imaginary vertex " +
                                                                  std::to_string(to_int(v)) + " next to a real one");
                }
            }
        }
        h.remove_vertex(v);
        for (const VertexId w : nb) {
            h.at(w).self_int += 1;
        }
        if (nb.size() == 2) {
            h.add_edge(nb[0], nb[1]);
        }
    }
}

namespace {

std::string vertex_label(const DecoratedGraph& g, VertexId v)
{
    const VertexData& d = g.at(v);
    std::ostringstream os;
    os << d.self_int << ',' << d.genus << ',';
    if (d.mult) {
        os << *d.mult;
    }
    os << ',';
    if (d.c1) {
        os << *d.c1;
    }
    os << ',' << (d.real ? (*d.real ? "R" : "I") : "") << ',' << (d.arm ? d.arm->to_string() : "") << ','
       << g.arrow_count(v);
    return os.str();
}

std::string encode(const DecoratedGraph& g, VertexId v, std::optional<VertexId> parent)
{
    std::vector<std::string> children;
    for (const VertexId w : g.neighbors(v)) {
        if (!parent || w != *parent) {
            children.push_back(encode(g, w, v));
        }
    }
    std::sort(children.begin(), children.end());
    std::string out = "(" + vertex_label(g, v);
    for (const auto& c : children) {
        out += c;
    }
    return out + ")";
}

std::vector<VertexId> centres(const DecoratedGraph& g)
{
    std::map<VertexId, std::size_t> deg;
    std::vector<VertexId> layer;
    for (const VertexId v : g.ids()) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) {
            layer.push_back(v);
        }
    }
    std::size_t remaining = g.size();
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<VertexId> next;
        for (const VertexId v : layer) {
            for (const VertexId w : g.neighbors(v)) {
                if (--deg[w] == 1) {
                    next.push_back(w);
                }
            }
        }
        layer = std::move(next);
    }
    return layer;
}

}  // namespace

std::string canonical_form(const DecoratedGraph& g)
{
    if (g.size() == 0) {
        return "";
    }
    if (!g.is_tree()) {
        throw Error(ErrorCode::consistency_error, "canonical form needs a tree");
    }
    std::string best;
    for (const VertexId c : centres(g)) {
        std::string enc = encode(g, c, std::nullopt);
        if (best.empty() || enc < best) {
            best = std::move(enc);
        }
    }
    return best;
}

}  // namespace tbcalc
