#pragma once

#include "tbcalc/cover.hpp"
#include "tbcalc/embedres.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tbcalc {

enum class Suite { period, symmetry, integrality, parity, structure };

std::string_view to_string(Suite s);
/// Throws Error(malformed_document) for an unknown suite name.
Suite parse_suite(std::string_view text);

struct VerifyConfig {
    std::set<Suite> suites;
    std::int64_t m_max = 10;
    std::int64_t n_max = 120;
    std::int64_t k_max = 3;
    /// false: serial reference evaluation.
    bool parallel = true;
    int threads = 0;
};

struct IdentityCount {
    std::string identity;
    std::size_t instances = 0;
    std::size_t violations = 0;
};

struct Violation {
    std::string identity;
    std::string detail;
};

struct VerifyReport {
    std::vector<IdentityCount> counts;
    std::vector<Violation> violations;
    /// Base pairs with an exponent < 2 or gcd != 1.
    std::size_t skipped = 0;

    bool ok() const { return violations.empty(); }
    std::size_t instances() const;
};

/// Checks the identities of the selected suites exactly over the base pairs
/// 2 <= m <= m_max, 2 <= n <= n_max with gcd(m,n) = 1. Shifted partners
/// (n + 4m, 4km - t, ...) may exceed n_max.
///
/// period       m odd: tb(m,n+4m) = tb(m,n); 4|m: tb(m,n+2m) = tb(m,n);
///              m = 2 mod 4: tb_-(m,n+2m) - tb_-(m,n) = 4 and
///              tb_+(m,n+2m) - tb_+(m,n) = 4/(n(n+2m)).
/// symmetry     m odd, 4km > t: tb(m,4km-t) + tb(m,t) = -2 for both signs;
///              m even, 2km > t: tb_-(m,2km-t) + tb_-(m,t) = -4 (4|m) or
///              -4+4k otherwise; m, n odd: tb_+ = tb_-.
/// integrality  tb_- is an integer; tb_+ is an integer when 4|m and n odd.
/// parity       the parity report laws on the uncontracted lift.
/// structure    negative definiteness, |det| = 1 for odd exponents,
///              conj-invariance of W, and the growth laws of the embedded
///              and minimal graphs under n -> n + 2m (or n + m) and
///              n -> n + 4m/gcd(m,2).
VerifyReport verify_identities(const VerifyConfig& config);

/// Self-intersections along each arm of the rupture vertex with the given
/// label kind, nearest first; sorted.
std::vector<std::vector<std::int64_t>> arm_sequences(const CoverGraph& g, ArmKind kind);

/// Growth of Γ(m,n) to Γ(m, n + 4m/gcd(m,2)): each (n)-arm gains two
/// vertices at its end, the last with self-intersection -2; the rupture and
/// the other arms are unchanged. Needs both graphs with a rupture vertex.
bool minimal_growth_holds(const CoverGraph& small, const CoverGraph& large, std::string* why = nullptr);

/// Growth of Γ_f(m,n) to Γ_f(m,n'), n' = n+2m (m odd) or n+m (m even): the
/// larger graph ends, on the side of the terminal of multiplicity m, in a
/// terminal vertex of multiplicity m (self-intersection -2 whenever n' > 2m
/// or m is odd) preceded, for m odd, by a vertex of multiplicity 2m; removing
/// them leaves a tree with the self-intersections of Γ_f(m,n).
bool embedded_growth_holds(const EmbeddedResolution& small, const EmbeddedResolution& large, std::string* why = nullptr);

}  // namespace tbcalc
