#ifndef TSPLIT_CONSTRUCTION_HPP
#define TSPLIT_CONSTRUCTION_HPP

#include "tsplit/digraph.hpp"

#include <cstdint>
#include <vector>

namespace tsplit {

/// Default cap on the number of vertices a constructor may produce (3^10).
inline constexpr std::size_t default_size_limit = 59049;

/// Largest level whose 3^k fits in 64 bits.
inline constexpr unsigned max_level = 40;

/// 3^k, throwing SizeLimitError past max_level.
auto pow3(unsigned k) -> std::uint64_t;

/// (3^k - 1) / 2: the regular out-degree of T_k and the size cap of the bounded subsets.
auto half_order(unsigned k) -> std::uint64_t;

/**
 * Base-3 label of a vertex of T_k, most significant digit first.
 * The leading digit names the copy: 0 for A, 1 for B, 2 for C.
 */
class TritLabel {
  public:
    TritLabel(unsigned k, std::uint64_t id);
    TritLabel(unsigned k, std::vector<std::uint8_t> digits);

    auto level() const -> unsigned { return _k; }
    auto digits() const -> const std::vector<std::uint8_t>& { return _digits; }
    auto id() const -> std::uint64_t;
    /// Copy index of the leading digit; requires k >= 1.
    auto copy() const -> unsigned;

  private:
    unsigned _k;
    std::vector<std::uint8_t> _digits;
};

struct LevelParams {
    unsigned k;
    std::uint64_t order;      // 3^k
    std::uint64_t reg_degree; // (3^k - 1) / 2
    std::uint64_t n;          // half of |V(D_k)|
    std::int64_t s;           // n - 1, the minimum out-degree of D_k
    std::uint64_t bound;      // ((3^k - 1)/2 - k) / 2
};

auto level_params(unsigned k) -> LevelParams;

/// T_k by repeated cyclic composition of three copies of T_{k-1}.
auto build_T_recursive(unsigned k, std::size_t size_limit = default_size_limit) -> Digraph;

/// T_k filled directly from trit_arc.
auto build_T_closed_form(unsigned k, std::size_t size_limit = default_size_limit) -> Digraph;

/**
 * Whether u -> v in T_k: at the leading trit where u and v differ, the
 * digit of v is one more (mod 3) than the digit of u.
 */
auto trit_arc(std::uint64_t u, std::uint64_t v, unsigned k) -> bool;

/// Disjoint union of a, b, c (in that id order) plus all arcs a->b, b->c, c->a.
auto compose_cyclic(const Digraph& a, const Digraph& b, const Digraph& c,
                    std::size_t size_limit = default_size_limit) -> Digraph;

/// T_k minus vertex 0: a tournament on 2n vertices with minimum out-degree n - 1.
auto build_D(unsigned k, std::size_t size_limit = default_size_limit) -> Digraph;

} // namespace tsplit

#endif
