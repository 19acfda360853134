#include "tsplit/certifier.hpp"

#include "tsplit/construction.hpp"
#include "tsplit/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace tsplit {

namespace {

void require_level_set(const VertexSet& x, unsigned k) {
    if (x.owner_n() != pow3(k))
        throw DomainError("set indexes " + std::to_string(x.owner_n()) + " vertices, T_" + std::to_string(k) +
                          " has " + std::to_string(pow3(k)));
}

auto rotated_sizes(const std::array<VertexSet, 3>& parts, unsigned r) -> std::array<std::size_t, 3> {
    return {parts[r].size(), parts[(r + 1) % 3].size(), parts[(r + 2) % 3].size()};
}

auto first_ids(const VertexSet& x, std::size_t count) -> VertexSet {
    VertexSet out(x.owner_n());
    std::size_t taken = 0;
    x.for_each([&](Vertex v) {
        if (taken < count) {
            out.insert(v);
            ++taken;
        }
    });
    return out;
}

auto certify_rec(unsigned k, const VertexSet& x) -> BoundCertificate {
    BoundCertificate cert;
    cert.level = k;
    cert.subset = x;

    if (k == 0 || x.empty()) {
        cert.kind = CaseKind::Base;
        cert.claimed_bound = 0;
        return cert;
    }

    const auto sub_half = static_cast<std::size_t>(half_order(k - 1));
    const auto parts = partition_parts(x, k);

    for (unsigned r = 0; r < 3; ++r) {
        const auto sizes = rotated_sizes(parts, r);
        if (sizes[1] == 0 && sizes[0] != 0) {
            cert.kind = CaseKind::EmptyPart;
            cert.rotation = r;
            cert.part_sizes = sizes;
            cert.claimed_bound = static_cast<Degree>(sub_half);
            return cert;
        }
    }
    if (parts[0].empty() || parts[1].empty() || parts[2].empty())
        throw std::logic_error("no rotation empties B while keeping A nonempty");

    for (unsigned r = 0; r < 3; ++r) {
        const auto sizes = rotated_sizes(parts, r);
        if (sizes[0] <= sub_half && sizes[1] <= sub_half) {
            auto child = certify_rec(k - 1, strip_leading_trit(parts[r], k, r));
            cert.kind = CaseKind::TwoSmall;
            cert.rotation = r;
            cert.part_sizes = sizes;
            cert.claimed_bound = child.claimed_bound + static_cast<Degree>(sizes[1]);
            cert.child = std::make_shared<const BoundCertificate>(std::move(child));
            return cert;
        }
    }
    for (unsigned r = 0; r < 3; ++r) {
        const auto sizes = rotated_sizes(parts, r);
        if (sizes[0] > sub_half && sizes[1] > sub_half) {
            const unsigned b_copy = (r + 1) % 3;
            auto chosen = first_ids(parts[b_copy], sub_half);
            auto child = certify_rec(k - 1, strip_leading_trit(chosen, k, b_copy));
            cert.kind = CaseKind::TwoLarge;
            cert.rotation = r;
            cert.part_sizes = sizes;
            cert.claimed_bound =
                child.claimed_bound + static_cast<Degree>(sizes[1] - sub_half) + static_cast<Degree>(sizes[2]);
            cert.chosen = std::move(chosen);
            cert.child = std::make_shared<const BoundCertificate>(std::move(child));
            return cert;
        }
    }
    // Two of three sizes always sit on the same side of sub_half.
    throw std::logic_error("pigeonhole failed");
}

} // namespace

auto to_string(CaseKind kind) -> const char* {
    switch (kind) {
    case CaseKind::Base:
        return "Base";
    case CaseKind::EmptyPart:
        return "EmptyPart";
    case CaseKind::TwoSmall:
        return "TwoSmall";
    case CaseKind::TwoLarge:
        return "TwoLarge";
    }
    return "?";
}

auto partition_parts(const VertexSet& x, unsigned k) -> std::array<VertexSet, 3> {
    if (k == 0)
        throw DomainError("T_0 has no copies to partition into");
    require_level_set(x, k);
    const auto block = pow3(k - 1);
    std::array<VertexSet, 3> parts{VertexSet(x.owner_n()), VertexSet(x.owner_n()), VertexSet(x.owner_n())};
    x.for_each([&](Vertex v) { parts[v / block].insert(v); });
    return parts;
}

auto strip_leading_trit(const VertexSet& part, unsigned k, unsigned copy) -> VertexSet {
    if (k == 0 || copy > 2)
        throw DomainError("bad level or copy index");
    require_level_set(part, k);
    const auto block = pow3(k - 1);
    const auto lo = copy * block;
    VertexSet out(block);
    part.for_each([&](Vertex v) {
        if (v < lo || v >= lo + block)
            throw DomainError("vertex " + std::to_string(v) + " is not in copy " + std::to_string(copy));
        out.insert(static_cast<Vertex>(v - lo));
    });
    return out;
}

auto certify_bound(unsigned k, const VertexSet& x) -> BoundCertificate {
    require_level_set(x, k);
    if (x.size() > half_order(k))
        throw PreconditionError("|X| = " + std::to_string(x.size()) + " exceeds (3^k - 1)/2 = " +
                                std::to_string(half_order(k)));
    return certify_rec(k, x);
}

auto replay(const BoundCertificate& cert) -> bool {
    const unsigned k = cert.level;
    if (cert.subset.owner_n() != pow3(k))
        return false;
    if (cert.kind == CaseKind::Base)
        return (k == 0 || cert.subset.empty()) && cert.claimed_bound == 0 && !cert.child;
    if (k == 0 || cert.subset.empty() || cert.rotation > 2)
        return false;

    const auto sub_half = static_cast<std::size_t>(half_order(k - 1));
    const auto parts = partition_parts(cert.subset, k);
    const auto sizes = rotated_sizes(parts, cert.rotation);
    if (sizes != cert.part_sizes)
        return false;
    const unsigned a_copy = cert.rotation;
    const unsigned b_copy = (cert.rotation + 1) % 3;

    switch (cert.kind) {
    case CaseKind::EmptyPart:
        return sizes[1] == 0 && sizes[0] > 0 && cert.claimed_bound == sub_half && !cert.child;
    case CaseKind::TwoSmall:
        return cert.child && sizes[0] <= sub_half && sizes[1] <= sub_half && cert.child->level == k - 1 &&
               cert.child->subset == strip_leading_trit(parts[a_copy], k, a_copy) && replay(*cert.child) &&
               cert.claimed_bound == cert.child->claimed_bound + sizes[1];
    case CaseKind::TwoLarge: {
        if (!cert.child || !cert.chosen || sizes[0] <= sub_half || sizes[1] <= sub_half)
            return false;
        const auto& s = *cert.chosen;
        if (s.size() != sub_half || (s & parts[b_copy]) != s)
            return false;
        return cert.child->level == k - 1 && cert.child->subset == strip_leading_trit(s, k, b_copy) &&
               replay(*cert.child) &&
               cert.claimed_bound == cert.child->claimed_bound + (sizes[1] - s.size()) + sizes[2];
    }
    case CaseKind::Base:
        break;
    }
    return false;
}

namespace {

void render_rec(std::ostringstream& out, const BoundCertificate& cert, unsigned depth) {
    out << std::string(2 * depth, ' ') << to_string(cert.kind) << " k=" << cert.level
        << " |X|=" << cert.subset.size();
    if (cert.kind != CaseKind::Base) {
        out << " r=" << cert.rotation << " parts=(" << cert.part_sizes[0] << ',' << cert.part_sizes[1] << ','
            << cert.part_sizes[2] << ')';
    }
    if (cert.chosen)
        out << " |S|=" << cert.chosen->size();
    out << " bound=" << cert.claimed_bound << '\n';
    if (cert.child)
        render_rec(out, *cert.child, depth + 1);
}

} // namespace

auto render(const BoundCertificate& cert) -> std::string {
    std::ostringstream out;
    render_rec(out, cert, 0);
    return out.str();
}

auto min_identity_check(const Digraph& tk, const Digraph& tk_minus_1, unsigned k, const VertexSet& x)
    -> MinIdentity {
    if (k == 0)
        throw DomainError("the identity needs k >= 1");
    if (tk.n() != pow3(k) || tk_minus_1.n() != pow3(k - 1))
        throw DimensionError("digraphs do not match the level");
    const auto parts = partition_parts(x, k);
    for (const auto& p : parts)
        if (p.empty())
            throw PreconditionError("min identity needs all three parts nonempty");

    MinIdentity result;
    result.direct = min_out_degree(tk, x);
    Degree best = std::numeric_limits<Degree>::max();
    for (unsigned c = 0; c < 3; ++c) {
        const Degree inside = min_out_degree(tk_minus_1, strip_leading_trit(parts[c], k, c));
        best = std::min(best, inside + static_cast<Degree>(parts[(c + 1) % 3].size()));
    }
    result.via_parts = best;
    return result;
}

auto min_identity_check(unsigned k, const VertexSet& x) -> MinIdentity {
    if (k == 0)
        throw DomainError("the identity needs k >= 1");
    return min_identity_check(build_T_recursive(k), build_T_recursive(k - 1), k, x);
}

} // namespace tsplit
