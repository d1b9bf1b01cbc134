#pragma once

#include "tbcalc/batch.hpp"
#include "tbcalc/graph.hpp"
#include "tbcalc/linking.hpp"
#include "tbcalc/tb.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tbcalc {

inline constexpr const char* kFormatVersion = "1";

struct GraphMeta {
    std::optional<std::int64_t> m;
    std::optional<std::int64_t> n;
    std::optional<Sign> sign;
    std::string stage;  // e.g. "gamma_f", "separated", "lifted", "minimal", "real_model"
    friend bool operator==(const GraphMeta&, const GraphMeta&) = default;
};

struct GraphDocument {
    std::string format_version = kFormatVersion;
    DecoratedGraph graph;
    GraphMeta meta;
    friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

nlohmann::json to_json(const GraphDocument& doc);
/// Throws Error(malformed_document).
GraphDocument graph_document_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TbResult& r);
nlohmann::json to_json(const LinkingMatrix& lm);
nlohmann::json to_json(const Decomposition& d);
/// Throws Error(malformed_decomposition).
Decomposition decomposition_from_json(const nlohmann::json& j);

/// "[[a, b], [c, d]]" with entries in p/q form.
std::string format_matrix(const LinkingMatrix& lm);

/// GraphViz rendering: nodes "id:self_int[:mult][R|I]", real black,
/// imaginary gray, members of `w` double-bordered, arrows as diamonds.
std::string to_dot(const DecoratedGraph& g, const std::set<VertexId>& w = {});

/// CSV with header m,n,sign,tb_num,tb_den,integer_flag, rows sorted by
/// (m,n,sign) and a trailing "# skipped pairs: k" line. Throws the
/// row's error as Error(consistency_error) if any row failed.
void write_table_csv(std::ostream& os, std::vector<GridRow> rows, std::size_t skipped);

}  // namespace tbcalc
