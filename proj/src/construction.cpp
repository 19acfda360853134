#include "tsplit/construction.hpp"

#include "tsplit/errors.hpp"

#include <string>

namespace tsplit {

namespace {

void require_size(std::uint64_t vertices, std::size_t size_limit) {
    if (vertices > size_limit)
        throw SizeLimitError(std::to_string(vertices) + " vertices exceeds the size limit of " +
                             std::to_string(size_limit));
}

} // namespace

auto pow3(unsigned k) -> std::uint64_t {
    if (k > max_level)
        throw SizeLimitError("3^" + std::to_string(k) + " overflows 64 bits");
    std::uint64_t p = 1;
    for (unsigned i = 0; i < k; ++i)
        p *= 3;
    return p;
}

auto half_order(unsigned k) -> std::uint64_t {
    return (pow3(k) - 1) / 2;
}

TritLabel::TritLabel(unsigned k, std::uint64_t id) : _k(k), _digits(k, 0) {
    if (id >= pow3(k))
        throw DomainError("id " + std::to_string(id) + " out of range for level " + std::to_string(k));
    for (unsigned i = k; i-- > 0;) {
        _digits[i] = static_cast<std::uint8_t>(id % 3);
        id /= 3;
    }
}

TritLabel::TritLabel(unsigned k, std::vector<std::uint8_t> digits) : _k(k), _digits(std::move(digits)) {
    if (_digits.size() != k)
        throw DomainError("label must have exactly k digits");
    for (auto d : _digits)
        if (d > 2)
            throw DomainError("trit digit out of range");
}

auto TritLabel::id() const -> std::uint64_t {
    std::uint64_t id = 0;
    for (auto d : _digits)
        id = id * 3 + d;
    return id;
}

auto TritLabel::copy() const -> unsigned {
    if (_k == 0)
        throw DomainError("T_0 has no copies");
    return _digits.front();
}

auto level_params(unsigned k) -> LevelParams {
    LevelParams p{};
    p.k = k;
    p.order = pow3(k);
    p.reg_degree = (p.order - 1) / 2;
    p.n = p.reg_degree;
    p.s = static_cast<std::int64_t>(p.n) - 1;
    // (3^k - 1)/2 and k have the same parity, so this division is exact.
    p.bound = (p.n - k) / 2;
    return p;
}

auto trit_arc(std::uint64_t u, std::uint64_t v, unsigned k) -> bool {
    const auto order = pow3(k);
    if (u >= order || v >= order)
        throw DomainError("vertex out of range for level " + std::to_string(k));
    if (u == v)
        throw DomainError("trit_arc is undefined on a loop");
    for (std::uint64_t place = order / 3; place > 0; place /= 3) {
        const auto du = (u / place) % 3;
        const auto dv = (v / place) % 3;
        if (du != dv)
            return (dv + 3 - du) % 3 == 1;
    }
    return false; // unreachable: u != v
}

auto compose_cyclic(const Digraph& a, const Digraph& b, const Digraph& c, std::size_t size_limit)
    -> Digraph {
    const std::uint64_t total = std::uint64_t{a.n()} + b.n() + c.n();
    require_size(total, size_limit);

    Digraph out(total);
    const Digraph* parts[3] = {&a, &b, &c};
    Vertex offsets[4] = {0, static_cast<Vertex>(a.n()), static_cast<Vertex>(a.n() + b.n()),
                         static_cast<Vertex>(total)};
    for (unsigned p = 0; p < 3; ++p) {
        const Digraph& part = *parts[p];
        const unsigned next = (p + 1) % 3;
        for (Vertex u = 0; u < part.n(); ++u) {
            const Vertex gu = offsets[p] + u;
            out.or_into_row(gu, offsets[p], part.row(u), part.n());
            out.add_arcs_to_range(gu, offsets[next], offsets[next + 1]);
        }
    }
    return out;
}

auto build_T_recursive(unsigned k, std::size_t size_limit) -> Digraph {
    require_size(pow3(k), size_limit);
    Digraph t(1);
    for (unsigned level = 1; level <= k; ++level)
        t = compose_cyclic(t, t, t, size_limit);
    return t;
}

auto build_T_closed_form(unsigned k, std::size_t size_limit) -> Digraph {
    const auto order = pow3(k);
    require_size(order, size_limit);
    Digraph t(order);
    for (std::uint64_t u = 0; u < order; ++u)
        for (std::uint64_t v = 0; v < order; ++v)
            if (u != v && trit_arc(u, v, k))
                t.add_arc(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return t;
}

auto build_D(unsigned k, std::size_t size_limit) -> Digraph {
    if (k == 0)
        throw DomainError("D_0 would be the empty digraph; need k >= 1");
    return delete_vertex(build_T_recursive(k, size_limit), 0);
}

} // namespace tsplit
