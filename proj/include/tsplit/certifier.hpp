#ifndef TSPLIT_CERTIFIER_HPP
#define TSPLIT_CERTIFIER_HPP

#include "tsplit/digraph.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>

namespace tsplit {

/**
 * Upper bounds on the minimum out-degree of T_k[X], produced by
 * recursing through the three copies A, B, C of T_{k-1} inside T_k.
 *
 * A rotation r relabels copies so that the role A is played by copy r,
 * B by copy (r + 1) mod 3 and C by copy (r + 2) mod 3. Every rotation
 * preserves the arc pattern A -> B -> C -> A.
 *
 * Node kinds, with a = (3^(k-1) - 1) / 2 and rotated part sizes xA, xB, xC:
 *
 *   Base       k = 0 or X empty                       bound 0
 *   EmptyPart  xB = 0, xA > 0                         bound a
 *   TwoSmall   xA, xB <= a; child certifies X_A       bound child + xB
 *   TwoLarge   xA, xB >= a + 1; S = a smallest ids    bound child + (xB - a) + xC
 *              of X_B; child certifies S
 *
 * Children live at level k - 1, with the leading trit stripped from
 * each id. When several rotations qualify, TwoSmall beats TwoLarge and
 * the smallest r wins.
 */
enum class CaseKind { Base, EmptyPart, TwoSmall, TwoLarge };

auto to_string(CaseKind kind) -> const char*;

struct BoundCertificate {
    CaseKind kind = CaseKind::Base;
    unsigned level = 0;
    VertexSet subset;
    unsigned rotation = 0;
    /// Part sizes after rotation: (xA, xB, xC). Zero for Base nodes.
    std::array<std::size_t, 3> part_sizes{};
    /// TwoLarge only: S in level-k coordinates.
    std::optional<VertexSet> chosen;
    std::shared_ptr<const BoundCertificate> child;
    Degree claimed_bound = 0;
};

/// X split by leading trit into (X ∩ A, X ∩ B, X ∩ C), all in level-k coordinates.
auto partition_parts(const VertexSet& x, unsigned k) -> std::array<VertexSet, 3>;

/// A subset of copy `copy` of T_k re-expressed as a subset of T_{k-1}.
auto strip_leading_trit(const VertexSet& part, unsigned k, unsigned copy) -> VertexSet;

/// Requires |X| <= (3^k - 1)/2.
auto certify_bound(unsigned k, const VertexSet& x) -> BoundCertificate;

/// Recomputes every node from its subset and children; true iff all claims match.
auto replay(const BoundCertificate& cert) -> bool;

/// One node per line, children indented by two spaces.
auto render(const BoundCertificate& cert) -> std::string;

struct MinIdentity {
    Degree direct = 0;    // δ⁺(T_k[X])
    Degree via_parts = 0; // min of in-copy δ⁺ plus the next part's size
    auto holds() const -> bool { return direct == via_parts; }
};

/**
 * Compares δ⁺(T_k[X]) with
 *   min{ δ⁺(X_A) + x_B, δ⁺(X_B) + x_C, δ⁺(X_C) + x_A },
 * each in-copy term evaluated on T_{k-1}. Requires all parts nonempty.
 */
auto min_identity_check(const Digraph& tk, const Digraph& tk_minus_1, unsigned k, const VertexSet& x)
    -> MinIdentity;
auto min_identity_check(unsigned k, const VertexSet& x) -> MinIdentity;

} // namespace tsplit

#endif
