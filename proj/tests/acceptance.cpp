// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "tsplit/certifier.hpp"
#include "tsplit/construction.hpp"
#include "tsplit/experiments.hpp"
#include "tsplit/search.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace tsplit;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok)
            detail = why;
        ok = false;
    }
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;
    std::function<Outcome()> body;
};

auto random_subset(std::mt19937_64& rng, std::size_t n) -> VertexSet {
    VertexSet x(n);
    for (Vertex v = 0; v < n; ++v)
        if (rng() & 1U)
            x.insert(v);
    return x;
}

auto random_digraph(std::mt19937_64& rng, std::size_t n, bool tournament) -> Digraph {
    Digraph d(n);
    const double density = 0.15 + 0.7 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    std::bernoulli_distribution coin(density);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = tournament ? u + 1 : 0; v < n; ++v) {
            if (u == v)
                continue;
            if (tournament) {
                if (coin(rng))
                    d.add_arc(u, v);
                else
                    d.add_arc(v, u);
            } else if (coin(rng)) {
                d.add_arc(u, v);
            }
        }
    return d;
}

auto regularity() -> Outcome {
    Outcome o;
    for (unsigned k = 0; k <= 8; ++k) {
        const auto t = build_T_recursive(k);
        const auto reg = half_order(k);
        std::vector<Degree> in(t.n(), 0);
        for (Vertex u = 0; u < t.n(); ++u) {
            if (t.out_degree(u) != reg)
                o.fail("out-degree at k=" + std::to_string(k));
            for (Vertex v = 0; v < t.n(); ++v)
                in[v] += t.has_arc(u, v) ? 1 : 0;
        }
        for (Degree d : in)
            if (d != reg)
                o.fail("in-degree at k=" + std::to_string(k));
    }
    o.detail = o.ok ? "T_0..T_8 are (3^k-1)/2-regular in and out" : o.detail;
    return o;
}

auto construction_equivalence() -> Outcome {
    Outcome o;
    std::uint64_t pairs = 0;
    for (unsigned k = 0; k <= 7; ++k) {
        const auto t = build_T_recursive(k);
        for (Vertex u = 0; u < t.n(); ++u)
            for (Vertex v = 0; v < t.n(); ++v) {
                if (u == v)
                    continue;
                ++pairs;
                if (trit_arc(u, v, k) != t.has_arc(u, v))
                    o.fail("mismatch at k=" + std::to_string(k));
            }
    }
    if (o.ok)
        o.detail = std::to_string(pairs) + " ordered pairs agree";
    return o;
}

auto small_levels() -> Outcome {
    Outcome o;
    const Degree expected[] = {0, 0, 1};
    std::ostringstream detail;
    for (unsigned k = 0; k <= 2; ++k) {
        const auto p = level_params(k);
        const auto r = enumerate_max(build_T_recursive(k), {0, static_cast<std::size_t>(p.reg_degree)});
        detail << "k=" << k << " max=" << r.best_value << " bound=" << p.bound << "; ";
        if (!r.exact || r.best_value != expected[k] || r.best_value > p.bound)
            o.fail("k=" + std::to_string(k) + " max " + std::to_string(r.best_value));
    }
    if (o.ok)
        o.detail = detail.str();
    return o;
}

auto level_three() -> Outcome {
    Outcome o;
    const auto single = verify_theorem2(3);
    SearchOptions eight;
    eight.threads = 8;
    const auto parallel = verify_theorem2(3, eight);

    if (!single.passed || !*single.passed)
        o.fail("single-threaded run did not pass");
    if (!parallel.passed || !*parallel.passed)
        o.fail("8-worker run did not pass");
    if (single.report.best_value != parallel.report.best_value || single.report.best_set != parallel.report.best_set)
        o.fail("worker count changed the result");
    const double single_s = std::chrono::duration<double>(single.report.elapsed).count();
    const double parallel_s = std::chrono::duration<double>(parallel.report.elapsed).count();
    if (single_s > 30 * 60)
        o.fail("single-threaded run over 30 min");
    if (parallel_s > 5 * 60)
        o.fail("8-worker run over 5 min");
    if (o.ok) {
        std::ostringstream d;
        d << "max=" << single.report.best_value << " <= 5 over " << single.report.nodes_visited
          << " subsets; witness " << to_string(witness_extremal(single)) << "; " << single_s << " s (1 worker), "
          << parallel_s << " s (8 workers)";
        o.detail = d.str();
    }
    return o;
}

auto deduction() -> Outcome {
    Outcome o;
    for (unsigned k = 1; k <= 7; ++k) {
        const auto d = build_D(k);
        const auto n = half_order(k);
        if (d.n() != 2 * n)
            o.fail("wrong order at k=" + std::to_string(k));
        if (min_out_degree(d) != n - 1)
            o.fail("δ⁺(D_k) != n-1 at k=" + std::to_string(k));
        std::size_t low = 0;
        for (Vertex v = 0; v < d.n(); ++v)
            low += d.out_degree(v) == n - 1 ? 1 : 0;
        if (low != n)
            o.fail("count of degree n-1 vertices at k=" + std::to_string(k));
    }
    if (o.ok)
        o.detail = "δ⁺(D_k) = n-1 attained by exactly n vertices, k=1..7";
    return o;
}

auto certifier_soundness() -> Outcome {
    Outcome o;
    std::mt19937_64 rng(0x5eed0006);
    std::uint64_t checked = 0;
    for (unsigned k = 1; k <= 6; ++k) {
        const auto t = build_T_recursive(k);
        const auto cap = half_order(k);
        const auto bound = level_params(k).bound;
        for (int i = 0; i < 10000;) {
            // Uniform over all subsets, conditioned on the size cap.
            auto x = random_subset(rng, t.n());
            if (x.size() > cap)
                continue;
            ++i;
            ++checked;
            const auto cert = certify_bound(k, x);
            if (min_out_degree(t, x) > cert.claimed_bound)
                o.fail("unsound at k=" + std::to_string(k) + " X=" + to_string(x));
            if (cert.claimed_bound > bound)
                o.fail("over the cap at k=" + std::to_string(k));
            if (!replay(cert))
                o.fail("replay mismatch at k=" + std::to_string(k));
        }
    }
    if (o.ok)
        o.detail = std::to_string(checked) + " certificates, zero violations";
    return o;
}

auto min_identity() -> Outcome {
    Outcome o;
    std::uint64_t checked = 0;

    const auto t2 = build_T_recursive(2);
    const auto t1 = build_T_recursive(1);
    for (Word mask = 0; mask < 512; ++mask) {
        const auto x = VertexSet::from_mask(9, mask);
        const auto parts = partition_parts(x, 2);
        if (parts[0].empty() || parts[1].empty() || parts[2].empty())
            continue;
        ++checked;
        if (!min_identity_check(t2, t1, 2, x).holds())
            o.fail("exhaustive k=2 X=" + to_string(x));
    }

    std::mt19937_64 rng(0x5eed0007);
    for (unsigned k = 2; k <= 6; ++k) {
        const auto tk = build_T_recursive(k);
        const auto below = build_T_recursive(k - 1);
        for (int i = 0; i < 10000;) {
            const auto x = random_subset(rng, tk.n());
            const auto parts = partition_parts(x, k);
            if (parts[0].empty() || parts[1].empty() || parts[2].empty())
                continue;
            ++i;
            ++checked;
            if (!min_identity_check(tk, below, k, x).holds())
                o.fail("k=" + std::to_string(k) + " X=" + to_string(x));
        }
    }
    if (o.ok)
        o.detail = std::to_string(checked) + " sets, equality in every case";
    return o;
}

auto solver_agreement() -> Outcome {
    Outcome o;
    std::mt19937_64 rng(0x5eed0008);
    std::uint64_t comparisons = 0;
    for (int g = 0; g < 200; ++g) {
        const std::size_t n = 1 + rng() % 14;
        const auto d = random_digraph(rng, n, g % 4 == 0);
        for (std::size_t size = 0; size <= n; ++size) {
            const auto e = enumerate_max(d, {size, size});
            const auto b = branch_bound_max(d, size);
            ++comparisons;
            if (e.best_value != b.best_value || e.best_set != b.best_set)
                o.fail("graph " + std::to_string(g) + " size " + std::to_string(size));
        }
    }
    if (o.ok)
        o.detail = std::to_string(comparisons) + " (graph, size) pairs agree";
    return o;
}

auto split_consistency() -> Outcome {
    Outcome o;
    const auto d3 = build_D(3);
    const auto summary = split_experiment(d3, 10000, 0x5eed0009);
    for (const auto& t : summary.trials)
        if (t.half_one.size() != 13 || t.delta_one > 5 || t.delta_two > 5)
            o.fail("trial seed " + std::to_string(t.seed));
    const auto halves = exhaustive_half_max(build_D(2));
    if (halves != 1)
        o.fail("D_2 exhaustive half max " + std::to_string(halves));
    if (o.ok) {
        std::ostringstream d;
        d << "D_3: 10000 trials, max " << summary.max_of_max << " mean " << summary.mean_of_max
          << "; D_2: max over 70 halves " << halves;
        o.detail = d.str();
    }
    return o;
}

auto gap_identity() -> Outcome {
    Outcome o;
    for (const auto& row : gap_table(12)) {
        // s/2 - bound == (k-1)/2, cross-multiplied in integers.
        const auto lhs = row.gap;
        if (lhs.num * 2 != (static_cast<std::int64_t>(row.k) - 1) * lhs.den)
            o.fail("k=" + std::to_string(row.k));
        if (!(lhs == row.half_k_minus_1))
            o.fail("k=" + std::to_string(row.k) + " half_k_minus_1");
    }
    if (o.ok)
        o.detail = "s/2 - bound = (k-1)/2 exactly for k=1..12";
    return o;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "regularity of T_0..T_8", 10, regularity},
        {2, "trit_arc equals recursive T_k, k<=7", 60, construction_equivalence},
        {3, "exhaustive bound check k=0,1,2", 1, small_levels},
        {4, "exhaustive bound check k=3", 30 * 60 + 5 * 60, level_three},
        {5, "min out-degree of D_k, k=1..7", 10, deduction},
        {6, "certificate soundness and cap, k=1..6", 120, certifier_soundness},
        {7, "min identity, k=2..6", 120, min_identity},
        {8, "branch-and-bound equals enumeration", 300, solver_agreement},
        {9, "split experiment consistency", 60, split_consistency},
        {10, "gap table identity, k=1..12", 1, gap_identity},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.time_limit_s)
            o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s");
        failures += o.ok ? 0 : 1;
        std::printf("[%s] %2d %-44s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
