#ifndef TSPLIT_SEARCH_HPP
#define TSPLIT_SEARCH_HPP

#include "tsplit/construction.hpp"
#include "tsplit/digraph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>

namespace tsplit {

/// Subset searches pack a whole vertex set into one machine word.
inline constexpr std::size_t max_search_vertices = 64;

inline constexpr std::uint64_t default_budget = 1'000'000'000;

struct SizeRange {
    std::size_t lo = 0;
    std::size_t hi = 0; // inclusive
};

struct SearchOptions {
    /// Maximum number of subsets an exhaustive run may visit.
    std::uint64_t budget = default_budget;
    unsigned threads = 1;
    /// Branch-and-bound only: false disables every bounding rule.
    bool pruning = true;
};

struct SearchReport {
    VertexSet best_set;
    Degree best_value = 0;
    std::uint64_t nodes_visited = 0;
    std::uint64_t pruned = 0;
    bool exact = false;
    std::chrono::nanoseconds elapsed{0};
};

/// Number of subsets of an n-set with size in `sizes`, as a floating estimate.
auto subset_count(std::size_t n, SizeRange sizes) -> long double;

/**
 * Maximum of δ⁺(D[X]) over every X with |X| in `sizes`, by Gosper-style
 * same-popcount enumeration. Ties go to the lexicographically smallest
 * id sequence. Throws BudgetExceeded before doing any work when the
 * family is larger than options.budget.
 */
auto enumerate_max(const Digraph& d, SizeRange sizes, const SearchOptions& options = {}) -> SearchReport;

/**
 * Same maximum over |X| = target_size, by depth-first search in
 * increasing id order with degree-potential bounding and candidate
 * peeling. Agrees with enumerate_max including the tie-break.
 */
auto branch_bound_max(const Digraph& d, std::size_t target_size, const SearchOptions& options = {})
    -> SearchReport;

struct TheoremCheck {
    LevelParams params;
    SearchReport report;
    /// Empty when the budget refused the run.
    std::optional<bool> passed;
};

/**
 * Maximises δ⁺(T_k[X]) over 1 <= |X| <= (3^k - 1)/2 (only X = ∅ at k = 0)
 * and compares with the level bound. The empty set is left out of the
 * family because its δ⁺ of 0 can never exceed any bound.
 */
auto verify_theorem2(unsigned k, const SearchOptions& options = {}) -> TheoremCheck;

/// The attaining set of an exact run; throws PreconditionError otherwise.
auto witness_extremal(const TheoremCheck& check) -> VertexSet;
auto witness_extremal(unsigned k, const SearchOptions& options = {}) -> VertexSet;

} // namespace tsplit

#endif
