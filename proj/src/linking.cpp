#include "tbcalc/linking.hpp"

#include "tbcalc/error.hpp"

#include <map>

namespace tbcalc {

bool LinkingMatrix::is_symmetric() const
{
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].size() != entries.size()) {
            return false;
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (entries[i][j] != entries[j][i]) {
                return false;
            }
        }
    }
    return true;
}

std::string to_string(ContractionKind k)
{
    switch (k) {
    case ContractionKind::two_sided_nonorientable:
        return "two_sided_nonorientable";
    case ContractionKind::two_sided_orientable:
        return "two_sided_orientable";
    case ContractionKind::one_sided:
        return "one_sided";
    }
    return "one_sided";
}

ContractionKind parse_contraction_kind(const std::string& text)
{
    for (const auto k : {ContractionKind::two_sided_nonorientable, ContractionKind::two_sided_orientable,
                         ContractionKind::one_sided}) {
        if (text == to_string(k)) {
            return k;
        }
    }
    throw Error(ErrorCode::malformed_decomposition, "unknown contraction kind '" + text + "'");
}

LinkingMatrix contraction_linking_matrix(const Rational& m, ContractionKind kind)
{
    if (m.sign() <= 0) {
        throw Error(ErrorCode::non_positive_m, "contracted curve needs m > 0, got " + m.to_string());
    }
    const Rational q = m / Rational(4);
    switch (kind) {
    case ContractionKind::two_sided_nonorientable:
        return {{{-q, -q}, {-q, -q}}};
    case ContractionKind::two_sided_orientable:
        return {{{-q, q}, {q, -q}}};
    case ContractionKind::one_sided:
        return {{{-m}}};
    }
    return {};
}

namespace {

void malformed(bool ok, const std::string& what)
{
    if (!ok) {
        throw Error(ErrorCode::malformed_decomposition, what);
    }
}

}  // namespace

LinkingMatrix linking_form_from_decomposition(const Decomposition& d)
{
    malformed(!d.pieces.empty(), "decomposition has no pieces");
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        malformed(!d.pieces[i].id.empty(), "piece without id");
        malformed(index.emplace(d.pieces[i].id, i).second, "duplicate piece id '" + d.pieces[i].id + "'");
    }

    const std::size_t k = d.pieces.size();
    LinkingMatrix out;
    out.entries.assign(k, std::vector<Rational>(k, Rational(0)));
    std::vector<std::int64_t> punctures(k, 0);
    std::map<std::string, bool> seen_points;

    for (const ContractedPoint& x : d.contracted_points) {
        malformed(seen_points.emplace(x.id, true).second, "duplicate contracted point '" + x.id + "'");
        const LinkingMatrix local = contraction_linking_matrix(x.m_value, x.kind);
        // Branch b of the point lies on piece branch_piece[b].
        std::vector<std::size_t> branch_piece;
        for (const Incidence& inc : x.incidences) {
            const auto it = index.find(inc.piece);
            malformed(it != index.end(), "point '" + x.id + "' names unknown piece '" + inc.piece + "'");
            malformed(inc.count > 0, "point '" + x.id + "' has a non-positive incidence count");
            for (int c = 0; c < inc.count; ++c) {
                branch_piece.push_back(it->second);
            }
            punctures[it->second] += inc.count;
        }
        malformed(branch_piece.size() == local.size(),
                  "point '" + x.id + "' has " + std::to_string(branch_piece.size()) + " branches, expected " +
                      std::to_string(local.size()));
        for (std::size_t a = 0; a < branch_piece.size(); ++a) {
            for (std::size_t b = 0; b < branch_piece.size(); ++b) {
                out.entries[branch_piece[a]][branch_piece[b]] += local.entries[a][b];
            }
        }
    }

    for (std::size_t i = 0; i < k; ++i) {
        const std::int64_t chi = d.pieces[i].euler_char_closed_piece - punctures[i];
        out.entries[i][i] -= Rational(chi);
    }
    return out;
}

}  // namespace tbcalc
