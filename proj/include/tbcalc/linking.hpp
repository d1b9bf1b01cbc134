#pragma once

#include "tbcalc/rational.hpp"

#include <string>
#include <vector>

namespace tbcalc {

/// Symmetric matrix of the linking form in a basis of real-link components.
struct LinkingMatrix {
    std::vector<std::vector<Rational>> entries;

    std::size_t size() const { return entries.size(); }
    bool is_symmetric() const;
    friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;
};

enum class ContractionKind { two_sided_nonorientable, two_sided_orientable, one_sided };

std::string to_string(ContractionKind k);
/// Throws Error(malformed_decomposition) for an unknown name.
ContractionKind parse_contraction_kind(const std::string& text);

/// Linking form created by contracting a real rational (-m)-curve, in the
/// basis of its real branches: all entries -m/4 (two-sided, non-orientable
/// neighbourhood), -m/4 diagonal and m/4 off-diagonal (two-sided orientable),
/// or the 1x1 matrix (-m) (one-sided). Throws Error(non_positive_m).
LinkingMatrix contraction_linking_matrix(const Rational& m, ContractionKind kind);

struct DecompositionPiece {
    std::string id;
    std::int64_t euler_char_closed_piece = 0;
    std::vector<std::string> boundary_ids;
};

struct Incidence {
    std::string piece;
    int count = 0;  // real branches of the point lying on this piece
};

struct ContractedPoint {
    std::string id;
    Rational m_value;
    ContractionKind kind = ContractionKind::two_sided_nonorientable;
    std::vector<Incidence> incidences;
};

/// Real part of a resolved surface cut into pieces along the real link,
/// with the contracted singular points recorded by their branch incidences.
struct Decomposition {
    std::vector<DecompositionPiece> pieces;
    std::vector<ContractedPoint> contracted_points;
};

/// Entry (i,i): minus the Euler characteristic of piece i punctured at each
/// incident branch, plus the contraction matrices summed over branch pairs
/// on piece i; entry (i,j): the contraction matrices summed over branch pairs
/// split between pieces i and j. Rows follow the order of `pieces`. Throws
/// Error(malformed_decomposition) on duplicate or unknown ids, non-positive
/// counts, or an incidence total other than 1 (one-sided) or 2 (two-sided).
LinkingMatrix linking_form_from_decomposition(const Decomposition& d);

}  // namespace tbcalc
