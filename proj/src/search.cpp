#include "tsplit/search.hpp"

#include "tsplit/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>
#include <vector>

namespace tsplit {

namespace {

using Clock = std::chrono::steady_clock;

// Lexicographic order on increasing id sequences; see lex_less(VertexSet, VertexSet).
auto lex_less_mask(Word a, Word b) -> bool {
    const Word diff = a ^ b;
    if (diff == 0)
        return false;
    const int bit = std::countr_zero(diff);
    const bool in_a = (a >> bit) & 1U;
    const Word other = in_a ? b : a;
    const bool other_continues = bit < 63 && (other >> (bit + 1)) != 0;
    return in_a == other_continues;
}

auto adjacency_masks(const Digraph& d) -> std::vector<Word> {
    if (d.n() > max_search_vertices)
        throw DomainError("subset search supports at most 64 vertices, got " + std::to_string(d.n()));
    std::vector<Word> adj(d.n(), 0);
    for (Vertex v = 0; v < d.n(); ++v)
        adj[v] = d.row(v)[0];
    return adj;
}

auto min_degree_mask(const Word* adj, Word x) -> int {
    if (x == 0)
        return 0;
    int best = 64;
    for (Word rest = x; rest; rest &= rest - 1)
        best = std::min(best, std::popcount(adj[std::countr_zero(rest)] & x));
    return best;
}

/// Best (value, lexicographically smallest set) seen so far; value -1 means none.
struct Incumbent {
    int value = -1;
    Word set = 0;

    void offer(int v, Word x) {
        if (v > value || (v == value && lex_less_mask(x, set))) {
            value = v;
            set = x;
        }
    }
};

struct ChunkResult {
    Incumbent best;
    std::uint64_t visited = 0;
    std::uint64_t pruned = 0;
};

/// Runs `work(i)` for i in [0, count) on `threads` workers pulling from a shared counter.
template <typename F>
void run_chunks(std::size_t count, unsigned threads, F&& work) {
    threads = std::max(1U, threads);
    if (threads == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
                work(i);
        });
}

auto reduce(const std::vector<ChunkResult>& results, std::size_t n, SearchReport& report) {
    Incumbent best;
    for (const auto& r : results) {
        if (r.best.value >= 0)
            best.offer(r.best.value, r.best.set);
        report.nodes_visited += r.visited;
        report.pruned += r.pruned;
    }
    report.best_value = static_cast<Degree>(std::max(best.value, 0));
    report.best_set = VertexSet::from_mask(n, best.value >= 0 ? best.set : 0);
}

// All subsets of size m whose largest member is h (or the empty set when m = 0),
// visited in increasing integer order.
struct EnumChunk {
    std::size_t m;
    std::size_t h;
};

void enumerate_chunk(const Word* adj, EnumChunk chunk, ChunkResult& out) {
    if (chunk.m == 0) {
        ++out.visited;
        out.best.offer(0, 0);
        return;
    }
    const Word top = Word{1} << chunk.h;
    const std::size_t low = chunk.m - 1;
    const Word limit = top; // subsets of the low bits stay below 2^h
    Word sub = low == 0 ? 0 : (Word{1} << low) - 1;
    for (;;) {
        const Word x = sub | top;
        ++out.visited;
        const int threshold = out.best.value;
        int value = 64;
        bool below = false;
        for (Word rest = x; rest; rest &= rest - 1) {
            const int deg = std::popcount(adj[std::countr_zero(rest)] & x);
            if (deg < threshold) {
                below = true;
                break;
            }
            value = std::min(value, deg);
        }
        if (below)
            ++out.pruned;
        else
            out.best.offer(value, x);

        if (sub == 0)
            break;
        // Next subset with the same popcount.
        const Word c = sub & (~sub + 1);
        const Word r = sub + c;
        sub = (((r ^ sub) >> 2) / c) | r;
        if (sub >= limit)
            break;
    }
}

struct BranchBound {
    const Word* adj;
    std::size_t m;
    bool pruning;
    bool tournament;
    int ceiling;
    ChunkResult* out;

    void dfs(Word selected, std::size_t selected_size, Word pool) {
        ++out->visited;
        if (selected_size == m) {
            out->best.offer(min_degree_mask(adj, selected), selected);
            return;
        }
        if (pruning) {
            if (tournament && out->best.value >= ceiling) {
                ++out->pruned;
                return;
            }
            const int need = out->best.value + 1;
            const int slots = static_cast<int>(m - selected_size);
            for (bool changed = true; changed;) {
                changed = false;
                for (Word rest = pool; rest; rest &= rest - 1) {
                    const int c = std::countr_zero(rest);
                    const int potential =
                        std::popcount(adj[c] & selected) + std::min(slots - 1, std::popcount(adj[c] & pool));
                    if (potential < need) {
                        pool &= ~(Word{1} << c);
                        changed = true;
                    }
                }
            }
            for (Word rest = selected; rest; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                const int potential =
                    std::popcount(adj[v] & selected) + std::min(slots, std::popcount(adj[v] & pool));
                if (potential < need) {
                    ++out->pruned;
                    return;
                }
            }
        }
        if (selected_size + static_cast<std::size_t>(std::popcount(pool)) < m) {
            ++out->pruned;
            return;
        }
        for (Word rest = pool; rest; rest &= rest - 1) {
            const Word bit = rest & (~rest + 1);
            const Word later = pool & ~((bit << 1) - 1);
            if (selected_size + 1 + static_cast<std::size_t>(std::popcount(later)) < m)
                break;
            dfs(selected | bit, selected_size + 1, later);
        }
    }
};

void check_range(const Digraph& d, SizeRange& sizes) {
    if (sizes.lo > sizes.hi)
        throw DomainError("empty size range");
    if (sizes.lo > d.n())
        throw DomainError("no subsets of size " + std::to_string(sizes.lo) + " in " + std::to_string(d.n()) +
                          " vertices");
    sizes.hi = std::min(sizes.hi, d.n());
}

} // namespace

auto subset_count(std::size_t n, SizeRange sizes) -> long double {
    long double total = 0;
    long double binom = 1; // C(n, 0)
    for (std::size_t m = 0; m <= std::min(sizes.hi, n); ++m) {
        if (m > 0)
            binom = binom * static_cast<long double>(n - m + 1) / static_cast<long double>(m);
        if (m >= sizes.lo)
            total += binom;
    }
    return total;
}

auto enumerate_max(const Digraph& d, SizeRange sizes, const SearchOptions& options) -> SearchReport {
    const auto start = Clock::now();
    check_range(d, sizes);
    const long double estimate = subset_count(d.n(), sizes);
    if (estimate > static_cast<long double>(options.budget))
        throw BudgetExceeded(estimate, options.budget);
    const auto adj = adjacency_masks(d);

    std::vector<EnumChunk> chunks;
    for (std::size_t m = sizes.lo; m <= sizes.hi; ++m) {
        if (m == 0)
            chunks.push_back({0, 0});
        else
            for (std::size_t h = m - 1; h < d.n(); ++h)
                chunks.push_back({m, h});
    }
    std::vector<ChunkResult> results(chunks.size());
    run_chunks(chunks.size(), options.threads,
               [&](std::size_t i) { enumerate_chunk(adj.data(), chunks[i], results[i]); });

    SearchReport report;
    reduce(results, d.n(), report);
    report.exact = true;
    report.elapsed = Clock::now() - start;
    return report;
}

auto branch_bound_max(const Digraph& d, std::size_t target_size, const SearchOptions& options)
    -> SearchReport {
    const auto start = Clock::now();
    if (target_size > d.n())
        throw DomainError("target size " + std::to_string(target_size) + " exceeds n = " + std::to_string(d.n()));
    const auto adj = adjacency_masks(d);
    const std::size_t n = d.n();

    SearchReport report;
    if (target_size == 0) {
        report.best_set = VertexSet(n);
        report.nodes_visited = 1;
        report.exact = true;
        report.elapsed = Clock::now() - start;
        return report;
    }

    const bool tournament = is_tournament(d);
    const int ceiling = static_cast<int>((target_size - 1) / 2);
    const Word all = n == 64 ? ~Word{0} : (Word{1} << n) - 1;
    const unsigned threads = std::max(1U, options.threads);

    // Chunk i holds the sets whose smallest member is i.
    const std::size_t roots = n - target_size + 1;
    std::vector<ChunkResult> results(threads == 1 ? 1 : roots);
    auto run_root = [&](std::size_t i, ChunkResult& out) {
        const Word bit = Word{1} << i;
        BranchBound bb{adj.data(), target_size, options.pruning, tournament, ceiling, &out};
        bb.dfs(bit, 1, all & ~((bit << 1) - 1));
    };
    if (threads == 1) {
        // One shared incumbent across roots; lexicographic root order keeps the tie-break.
        for (std::size_t i = 0; i < roots; ++i)
            run_root(i, results[0]);
    } else {
        run_chunks(roots, threads, [&](std::size_t i) { run_root(i, results[i]); });
    }

    reduce(results, n, report);
    report.exact = true;
    report.elapsed = Clock::now() - start;
    return report;
}

auto verify_theorem2(unsigned k, const SearchOptions& options) -> TheoremCheck {
    TheoremCheck check{level_params(k), {}, std::nullopt};
    const auto order = static_cast<std::size_t>(check.params.order);
    const SizeRange sizes = k == 0 ? SizeRange{0, 0} : SizeRange{1, static_cast<std::size_t>(check.params.reg_degree)};

    const long double estimate = subset_count(order, sizes);
    if (estimate > static_cast<long double>(options.budget)) {
        check.report.exact = false;
        return check;
    }
    const auto t = build_T_recursive(k);
    check.report = enumerate_max(t, sizes, options);
    check.passed = check.report.best_value <= check.params.bound;
    return check;
}

auto witness_extremal(const TheoremCheck& check) -> VertexSet {
    if (!check.report.exact || !check.passed.has_value())
        throw PreconditionError("no exact verification run for level " + std::to_string(check.params.k));
    return check.report.best_set;
}

auto witness_extremal(unsigned k, const SearchOptions& options) -> VertexSet {
    return witness_extremal(verify_theorem2(k, options));
}

} // namespace tsplit
