#include "tbcalc/io.hpp"

#include "tbcalc/error.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <tuple>

namespace tbcalc {

using nlohmann::json;

namespace {

void doc_check(bool ok, const std::string& what)
{
    if (!ok) {
        throw Error(ErrorCode::malformed_document, what);
    }
}

std::int64_t get_int(const json& j, const char* key)
{
    doc_check(j.contains(key) && j.at(key).is_number_integer(), std::string("field '") + key + "' must be an integer");
    return j.at(key).get<std::int64_t>();
}

VertexId get_id(const json& j)
{
    doc_check(j.is_number_integer(), "vertex id must be an integer");
    const auto v = j.get<std::int64_t>();
    doc_check(v >= 0 && v <= INT32_MAX, "vertex id out of range");
    return vid(static_cast<std::int32_t>(v));
}

}  // namespace

json to_json(const GraphDocument& doc)
{
    json vertices = json::array();
    for (const auto& [v, d] : doc.graph.vertices()) {
        json jv = {{"id", to_int(v)}, {"self_int", d.self_int}};
        if (d.genus != 0) {
            jv["genus"] = d.genus;
        }
        if (d.mult) {
            jv["mult"] = *d.mult;
        }
        if (d.real) {
            jv["real"] = *d.real;
        }
        if (d.arm) {
            jv["arm"] = d.arm->to_string();
        }
        if (d.c1) {
            jv["c1"] = *d.c1;
        }
        if (d.origin) {
            jv["origin"] = to_int(*d.origin);
        }
        if (d.sheet != 0) {
            jv["sheet"] = d.sheet;
        }
        vertices.push_back(std::move(jv));
    }
    json edges = json::array();
    for (const auto& [a, b] : doc.graph.edges()) {
        edges.push_back({to_int(a), to_int(b)});
    }
    json arrows = json::array();
    for (const VertexId v : doc.graph.arrows()) {
        arrows.push_back({{"vertex", to_int(v)}});
    }
    json meta = {{"stage", doc.meta.stage}};
    if (doc.meta.m) {
        meta["m"] = *doc.meta.m;
    }
    if (doc.meta.n) {
        meta["n"] = *doc.meta.n;
    }
    if (doc.meta.sign) {
        meta["sign"] = std::string(to_string(*doc.meta.sign));
    }
    return {{"format_version", doc.format_version},
            {"vertices", vertices},
            {"edges", edges},
            {"arrows", arrows},
            {"meta", meta}};
}

GraphDocument graph_document_from_json(const json& j)
{
    try {
        doc_check(j.is_object(), "graph document must be an object");
        GraphDocument doc;
        doc_check(j.contains("format_version") && j.at("format_version").is_string(), "missing format_version");
        doc.format_version = j.at("format_version").get<std::string>();
        doc_check(doc.format_version == kFormatVersion, "unsupported format_version '" + doc.format_version + "'");
        doc_check(j.contains("vertices") && j.at("vertices").is_array(), "missing vertices array");
        for (const json& jv : j.at("vertices")) {
            doc_check(jv.is_object() && jv.contains("id"), "vertex entry without id");
            VertexData d;
            d.self_int = get_int(jv, "self_int");
            if (jv.contains("genus")) {
                d.genus = static_cast<int>(get_int(jv, "genus"));
                doc_check(d.genus >= 0, "genus must be non-negative");
            }
            if (jv.contains("mult")) {
                d.mult = get_int(jv, "mult");
            }
            if (jv.contains("c1")) {
                d.c1 = get_int(jv, "c1");
            }
            if (jv.contains("real")) {
                doc_check(jv.at("real").is_boolean(), "field 'real' must be a boolean");
                d.real = jv.at("real").get<bool>();
            }
            if (jv.contains("arm")) {
                doc_check(jv.at("arm").is_string(), "field 'arm' must be a string");
                d.arm = ArmLabel::parse(jv.at("arm").get<std::string>());
            }
            if (jv.contains("origin")) {
                d.origin = get_id(jv.at("origin"));
            }
            if (jv.contains("sheet")) {
                d.sheet = static_cast<int>(get_int(jv, "sheet"));
                doc_check(d.sheet == 0 || d.sheet == 1, "sheet must be 0 or 1");
            }
            doc.graph.insert_vertex(get_id(jv.at("id")), d);
        }
        if (j.contains("edges")) {
            doc_check(j.at("edges").is_array(), "edges must be an array");
            for (const json& je : j.at("edges")) {
                doc_check(je.is_array() && je.size() == 2, "edge must be a pair of ids");
                doc.graph.add_edge(get_id(je.at(0)), get_id(je.at(1)));
            }
        }
        if (j.contains("arrows")) {
            doc_check(j.at("arrows").is_array(), "arrows must be an array");
            for (const json& ja : j.at("arrows")) {
                doc_check(ja.is_object() && ja.contains("vertex"), "arrow without vertex");
                doc.graph.add_arrow(get_id(ja.at("vertex")));
            }
        }
        if (j.contains("meta")) {
            const json& jm = j.at("meta");
            doc_check(jm.is_object(), "meta must be an object");
            if (jm.contains("m")) {
                doc.meta.m = get_int(jm, "m");
            }
            if (jm.contains("n")) {
                doc.meta.n = get_int(jm, "n");
            }
            if (jm.contains("sign")) {
                doc_check(jm.at("sign").is_string(), "meta.sign must be a string");
                doc.meta.sign = parse_sign(jm.at("sign").get<std::string>());
            }
            if (jm.contains("stage")) {
                doc_check(jm.at("stage").is_string(), "meta.stage must be a string");
                doc.meta.stage = jm.at("stage").get<std::string>();
            }
        }
        doc_check(doc.graph.is_tree(), "graph is not a tree");
        return doc;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::malformed_document, e.what());
    }
}

json to_json(const TbResult& r)
{
    json contributions = json::array();
    for (const auto& [v, np] : r.contributions) {
        json arms_json = json::array();
        for (const ArmWeight& a : r.arm_weights.at(v)) {
            arms_json.push_back({{"first", to_int(a.first)},
                                 {"length", a.length},
                                 {"weight", a.weight.to_string()},
                                 {"imaginary", a.imaginary}});
        }
        contributions.push_back({{"vertex", to_int(v)}, {"n_prime", np.to_string()}, {"arms", arms_json}});
    }
    json wr = json::array();
    for (const VertexId v : r.wr) {
        wr.push_back(to_int(v));
    }
    GraphDocument doc;
    doc.graph = r.graph;
    doc.meta = {r.m, r.n, r.sign, "real_model"};
    json out = {{"format_version", kFormatVersion},
                {"m", r.m},
                {"n", r.n},
                {"value", r.value.to_string()},
                {"integer", r.value.is_integer()},
                {"N", r.N},
                {"W_R", wr},
                {"contributions", contributions},
                {"graph", to_json(doc)}};
    if (r.sign) {
        out["sign"] = std::string(to_string(*r.sign));
    }
    if (r.rupture) {
        out["rupture"] = to_int(*r.rupture);
    }
    return out;
}

json to_json(const LinkingMatrix& lm)
{
    json rows = json::array();
    for (const auto& row : lm.entries) {
        json jr = json::array();
        for (const auto& x : row) {
            jr.push_back(x.to_string());
        }
        rows.push_back(std::move(jr));
    }
    return {{"format_version", kFormatVersion}, {"size", lm.size()}, {"entries", rows}};
}

json to_json(const Decomposition& d)
{
    json pieces = json::array();
    for (const auto& p : d.pieces) {
        pieces.push_back({{"id", p.id}, {"euler_char_closed_piece", p.euler_char_closed_piece}, {"boundary_ids", p.boundary_ids}});
    }
    json points = json::array();
    for (const auto& x : d.contracted_points) {
        json inc = json::array();
        for (const auto& i : x.incidences) {
            inc.push_back({{"piece", i.piece}, {"count", i.count}});
        }
        points.push_back({{"id", x.id}, {"m_value", x.m_value.to_string()}, {"kind", to_string(x.kind)}, {"incidences", inc}});
    }
    return {{"format_version", kFormatVersion}, {"pieces", pieces}, {"contracted_points", points}};
}

namespace {

void dec_check(bool ok, const std::string& what)
{
    if (!ok) {
        throw Error(ErrorCode::malformed_decomposition, what);
    }
}

std::string dec_string(const json& j, const char* key)
{
    dec_check(j.contains(key) && j.at(key).is_string(), std::string("field '") + key + "' must be a string");
    return j.at(key).get<std::string>();
}

}  // namespace

Decomposition decomposition_from_json(const json& j)
{
    try {
        dec_check(j.is_object(), "decomposition must be an object");
        if (j.contains("format_version")) {
            dec_check(j.at("format_version") == kFormatVersion, "unsupported format_version");
        }
        dec_check(j.contains("pieces") && j.at("pieces").is_array(), "missing pieces array");
        Decomposition d;
        for (const json& jp : j.at("pieces")) {
            dec_check(jp.is_object(), "piece must be an object");
            DecompositionPiece p;
            p.id = dec_string(jp, "id");
            dec_check(jp.contains("euler_char_closed_piece") && jp.at("euler_char_closed_piece").is_number_integer(),
                      "piece '" + p.id + "' needs an integer euler_char_closed_piece");
            p.euler_char_closed_piece = jp.at("euler_char_closed_piece").get<std::int64_t>();
            if (jp.contains("boundary_ids")) {
                dec_check(jp.at("boundary_ids").is_array(), "boundary_ids must be an array");
                for (const json& b : jp.at("boundary_ids")) {
                    dec_check(b.is_string(), "boundary id must be a string");
                    p.boundary_ids.push_back(b.get<std::string>());
                }
            }
            d.pieces.push_back(std::move(p));
        }
        if (j.contains("contracted_points")) {
            dec_check(j.at("contracted_points").is_array(), "contracted_points must be an array");
            for (const json& jx : j.at("contracted_points")) {
                dec_check(jx.is_object(), "contracted point must be an object");
                ContractedPoint x;
                x.id = dec_string(jx, "id");
                dec_check(jx.contains("m_value"), "point '" + x.id + "' has no m_value");
                const json& mv = jx.at("m_value");
                if (mv.is_number_integer()) {
                    x.m_value = Rational(mv.get<std::int64_t>());
                } else {
                    dec_check(mv.is_string(), "m_value must be an integer or a \"p/q\" string");
                    try {
                        x.m_value = Rational::parse(mv.get<std::string>());
                    } catch (const Error& e) {
                        throw Error(ErrorCode::malformed_decomposition, e.what());
                    }
                }
                dec_check(x.m_value.sign() > 0, "point '" + x.id + "' needs m_value > 0");
                x.kind = parse_contraction_kind(dec_string(jx, "kind"));
                dec_check(jx.contains("incidences") && jx.at("incidences").is_array(),
                          "point '" + x.id + "' has no incidences array");
                for (const json& ji : jx.at("incidences")) {
                    dec_check(ji.is_object() && ji.contains("count") && ji.at("count").is_number_integer(),
                              "incidence needs an integer count");
                    x.incidences.push_back({dec_string(ji, "piece"), ji.at("count").get<int>()});
                }
                d.contracted_points.push_back(std::move(x));
            }
        }
        return d;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::malformed_decomposition, e.what());
    }
}

std::string format_matrix(const LinkingMatrix& lm)
{
    std::string out = "[";
    for (std::size_t i = 0; i < lm.size(); ++i) {
        out += i == 0 ? "[" : ", [";
        for (std::size_t j = 0; j < lm.entries[i].size(); ++j) {
            out += (j == 0 ? "" : ", ") + lm.entries[i][j].to_string();
        }
        out += "]";
    }
    return out + "]";
}

std::string to_dot(const DecoratedGraph& g, const std::set<VertexId>& w)
{
    std::ostringstream os;
    os << "graph resolution {\n  node [shape=ellipse];\n";
    for (const auto& [v, d] : g.vertices()) {
        std::string label = std::to_string(to_int(v)) + ":" + std::to_string(d.self_int);
        if (d.mult) {
            label += ":" + std::to_string(*d.mult);
        }
        if (d.real) {
            label += *d.real ? "R" : "I";
        }
        const char* colour = d.real && !*d.real ? "gray" : "black";
        os << "  v" << to_int(v) << " [label=\"" << label << "\", color=" << colour << ", fontcolor=" << colour;
        if (w.count(v) != 0) {
            os << ", peripheries=2";
        }
        os << "];\n";
    }
    for (const auto& [a, b] : g.edges()) {
        os << "  v" << to_int(a) << " -- v" << to_int(b) << ";\n";
    }
    int k = 0;
    for (const VertexId v : g.arrows()) {
        os << "  a" << k << " [shape=diamond, label=\"\"];\n";
        os << "  v" << to_int(v) << " -- a" << k << ";\n";
        ++k;
    }
    os << "}\n";
    return os.str();
}

void write_table_csv(std::ostream& os, std::vector<GridRow> rows, std::size_t skipped)
{
    std::sort(rows.begin(), rows.end(), [](const GridRow& a, const GridRow& b) {
        return std::tuple(a.key.m, a.key.n, a.key.sign) < std::tuple(b.key.m, b.key.n, b.key.sign);
    });
    for (const auto& r : rows) {
        if (!r.value) {
            throw Error(ErrorCode::consistency_error,
                        "row (" + std::to_string(r.key.m) + "," + std::to_string(r.key.n) + ") failed: " + r.error);
        }
    }
    os << "m,n,sign,tb_num,tb_den,integer_flag\n";
    for (const auto& r : rows) {
        os << r.key.m << ',' << r.key.n << ',' << to_string(r.key.sign) << ',' << r.value->numerator().get_str() << ','
           << r.value->denominator().get_str() << ',' << (r.value->is_integer() ? "true" : "false") << '\n';
    }
    os << "# skipped pairs: " << skipped << '\n';
}

}  // namespace tbcalc
