#ifndef TSPLIT_EXPERIMENTS_HPP
#define TSPLIT_EXPERIMENTS_HPP

#include "tsplit/digraph.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace tsplit {

/**
 * SplitMix64 (Steele, Lea, Flood 2014). Chosen for experiments because
 * its output sequence is fixed by definition on every platform, unlike
 * the standard distributions.
 */
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : _state(seed) {}

    auto next() -> std::uint64_t {
        std::uint64_t z = (_state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection; bound > 0.
    auto below(std::uint64_t bound) -> std::uint64_t;

  private:
    std::uint64_t _state;
};

/// Seed of the substream for trial `index`: the first output of SplitMix64(seed ^ mix(index)).
auto trial_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t;

struct SplitTrial {
    std::uint64_t seed = 0;
    VertexSet half_one;
    Degree delta_one = 0;
    Degree delta_two = 0;
};

/// Fisher-Yates shuffle of the ids driven by SplitMix64(seed); the first half becomes half_one.
auto random_balanced_split(const Digraph& d, std::uint64_t seed) -> SplitTrial;

struct SplitSummary {
    std::vector<SplitTrial> trials; // by trial index
    Degree max_of_max = 0;
    double mean_of_max = 0.0;
};

auto split_experiment(const Digraph& d, std::uint64_t trials, std::uint64_t seed, unsigned threads = 1)
    -> SplitSummary;

/// Largest δ⁺ of any half of D, by exhaustive enumeration of the n-subsets.
auto exhaustive_half_max(const Digraph& d) -> Degree;

void write_split_csv(std::ostream& out, const SplitSummary& summary);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend auto operator==(const Rational&, const Rational&) -> bool = default;
};

/// num/den in lowest terms with den > 0.
auto make_rational(std::int64_t num, std::int64_t den) -> Rational;

struct GapRow {
    unsigned k = 0;
    std::uint64_t n = 0;
    std::int64_t s = 0;
    std::uint64_t bound = 0;
    Rational gap;            // s/2 - bound
    Rational half_k_minus_1; // (k-1)/2
    double log3_s = 0.0;     // display only
};

auto gap_table(unsigned k_max) -> std::vector<GapRow>;

void write_gap_csv(std::ostream& out, const std::vector<GapRow>& rows);

/// Shapes log s and sqrt(s log s) with constant 1, for display next to the gap column.
struct ReferenceCurves {
    double log_s = 0.0;
    double sqrt_s_log_s = 0.0;
};

auto reference_curves(std::int64_t s) -> ReferenceCurves;

} // namespace tsplit

#endif
