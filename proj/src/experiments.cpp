#include "tsplit/experiments.hpp"

#include "tsplit/construction.hpp"
#include "tsplit/errors.hpp"
#include "tsplit/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <thread>

namespace tsplit {

auto SplitMix64::below(std::uint64_t bound) -> std::uint64_t {
    if (bound == 0)
        throw DomainError("empty range");
    // Reject the top partial block so every residue is equally likely.
    constexpr auto top = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = top - top % bound;
    for (;;) {
        const auto r = next();
        if (r < limit)
            return r % bound;
    }
}

auto trial_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t {
    return SplitMix64(seed ^ SplitMix64(index).next()).next();
}

auto random_balanced_split(const Digraph& d, std::uint64_t seed) -> SplitTrial {
    if (d.n() % 2 != 0)
        throw DomainError("balanced split needs an even vertex count, got " + std::to_string(d.n()));
    std::vector<Vertex> ids(d.n());
    std::iota(ids.begin(), ids.end(), Vertex{0});
    SplitMix64 rng(seed);
    for (std::size_t i = ids.size(); i > 1; --i)
        std::swap(ids[i - 1], ids[rng.below(i)]);

    const std::size_t half = d.n() / 2;
    SplitTrial trial;
    trial.seed = seed;
    trial.half_one = VertexSet(d.n(), std::span<const Vertex>(ids.data(), half));
    trial.delta_one = min_out_degree(d, trial.half_one);
    trial.delta_two = min_out_degree(d, trial.half_one.complement());
    return trial;
}

auto split_experiment(const Digraph& d, std::uint64_t trials, std::uint64_t seed, unsigned threads)
    -> SplitSummary {
    if (trials == 0)
        throw DomainError("need at least one trial");
    if (d.n() % 2 != 0)
        throw DomainError("balanced split needs an even vertex count, got " + std::to_string(d.n()));

    SplitSummary summary;
    summary.trials.resize(trials);
    threads = std::max(1U, threads);
    if (threads == 1) {
        for (std::uint64_t i = 0; i < trials; ++i)
            summary.trials[i] = random_balanced_split(d, trial_seed(seed, i));
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (auto i = next++; i < trials; i = next++)
                    summary.trials[i] = random_balanced_split(d, trial_seed(seed, i));
            });
    }

    std::uint64_t total = 0;
    for (const auto& t : summary.trials) {
        const Degree m = std::max(t.delta_one, t.delta_two);
        summary.max_of_max = std::max(summary.max_of_max, m);
        total += m;
    }
    summary.mean_of_max = static_cast<double>(total) / static_cast<double>(trials);
    return summary;
}

auto exhaustive_half_max(const Digraph& d) -> Degree {
    if (d.n() % 2 != 0)
        throw DomainError("balanced split needs an even vertex count, got " + std::to_string(d.n()));
    const std::size_t half = d.n() / 2;
    return enumerate_max(d, {half, half}).best_value;
}

void write_split_csv(std::ostream& out, const SplitSummary& summary) {
    out << "trial,seed,delta_one,delta_two\n";
    for (std::size_t i = 0; i < summary.trials.size(); ++i) {
        const auto& t = summary.trials[i];
        out << i << ',' << t.seed << ',' << t.delta_one << ',' << t.delta_two << '\n';
    }
}

auto make_rational(std::int64_t num, std::int64_t den) -> Rational {
    if (den == 0)
        throw DomainError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const auto g = std::gcd(num, den);
    return {num / g, den / g};
}

auto gap_table(unsigned k_max) -> std::vector<GapRow> {
    std::vector<GapRow> rows;
    for (unsigned k = 1; k <= k_max; ++k) {
        const auto p = level_params(k);
        GapRow row;
        row.k = k;
        row.n = p.n;
        row.s = p.s;
        row.bound = p.bound;
        row.gap = make_rational(p.s - 2 * static_cast<std::int64_t>(p.bound), 2);
        row.half_k_minus_1 = make_rational(static_cast<std::int64_t>(k) - 1, 2);
        row.log3_s = std::log(static_cast<double>(p.s)) / std::log(3.0);
        rows.push_back(row);
    }
    return rows;
}

void write_gap_csv(std::ostream& out, const std::vector<GapRow>& rows) {
    out << "k,n,s,bound,gap_num,gap_den,log3_s\n";
    for (const auto& r : rows)
        out << r.k << ',' << r.n << ',' << r.s << ',' << r.bound << ',' << r.gap.num << ',' << r.gap.den << ','
            << r.log3_s << '\n';
}

auto reference_curves(std::int64_t s) -> ReferenceCurves {
    const double x = static_cast<double>(s);
    const double log_s = s > 0 ? std::log(x) : 0.0;
    return {log_s, std::sqrt(std::max(0.0, x * log_s))};
}

} // namespace tsplit
