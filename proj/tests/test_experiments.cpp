#include "oracles.hpp"
#include "tsplit/construction.hpp"
#include "tsplit/errors.hpp"
#include "tsplit/experiments.hpp"
#include "tsplit/search.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace tsplit;

TEST_CASE("SplitMix64 reference outputs") {
    // First outputs for seed 1234567, from the published reference implementation.
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ULL);
    CHECK(rng.next() == 3203168211198807973ULL);
    CHECK(rng.next() == 9817491932198370423ULL);

    SplitMix64 dice(42);
    for (int i = 0; i < 1000; ++i)
        CHECK(dice.below(6) < 6);
    CHECK_THROWS_AS(dice.below(0), DomainError);
}

TEST_CASE("random_balanced_split") {
    Digraph single(2);
    single.add_arc(0, 1);
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
        const auto t = random_balanced_split(single, seed);
        CHECK(t.half_one.size() == 1);
        CHECK(t.delta_one == 0);
        CHECK(t.delta_two == 0);
    }

    const auto d3 = build_D(3);
    const auto t = random_balanced_split(d3, 1);
    CHECK(t.half_one.size() == 13);
    CHECK(t.delta_one <= 5);
    CHECK(t.delta_two <= 5);
    CHECK(t.delta_one == min_out_degree(d3, t.half_one));
    CHECK(t.delta_two == min_out_degree(d3, t.half_one.complement()));

    CHECK_THROWS_AS(random_balanced_split(build_T_recursive(1), 1), DomainError);
}

TEST_CASE("exhaustive halves of D_2") {
    const auto d2 = build_D(2);
    // Oracle: all 70 four-subsets of the eight vertices.
    const auto m = oracle::to_matrix(d2);
    unsigned best = 0;
    unsigned halves = 0;
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
        const auto ids = oracle::ids_of_mask(mask);
        if (ids.size() != 4)
            continue;
        ++halves;
        best = std::max(best, oracle::min_out_degree(m, ids));
    }
    CHECK(halves == 70);
    CHECK(best == 1);
    CHECK(exhaustive_half_max(d2) == 1);
}

TEST_CASE("split_experiment") {
    const auto d2 = build_D(2);
    const auto s = split_experiment(d2, 1000, 7);
    CHECK(s.trials.size() == 1000);
    CHECK(s.max_of_max <= 1);

    const auto again = split_experiment(d2, 1000, 7);
    std::ostringstream a, b;
    write_split_csv(a, s);
    write_split_csv(b, again);
    CHECK(a.str() == b.str());
    CHECK(s.mean_of_max == again.mean_of_max);

    const auto threaded = split_experiment(d2, 1000, 7, 4);
    std::ostringstream c;
    write_split_csv(c, threaded);
    CHECK(c.str() == a.str());

    std::set<std::uint64_t> seeds;
    for (const auto& t : s.trials)
        seeds.insert(t.seed);
    CHECK(seeds.size() == 1000);

    CHECK_THROWS_AS(split_experiment(d2, 0, 7), DomainError);
}

TEST_CASE("split on a 2-regular toy matches enumeration") {
    // 4-cycle 0->1->2->3->0 plus both directions of each diagonal.
    Digraph toy(4);
    toy.add_arc(0, 1);
    toy.add_arc(1, 2);
    toy.add_arc(2, 3);
    toy.add_arc(3, 0);
    toy.add_arc(0, 2);
    toy.add_arc(2, 0);
    toy.add_arc(1, 3);
    toy.add_arc(3, 1);
    for (Vertex v = 0; v < 4; ++v)
        CHECK(toy.out_degree(v) == 2);

    const auto s = split_experiment(toy, 1000, 3);
    CHECK(s.max_of_max == enumerate_max(toy, {2, 2}).best_value);
    CHECK(s.max_of_max == 1);
}

TEST_CASE("split CSV format") {
    Digraph single(2);
    single.add_arc(0, 1);
    std::ostringstream out;
    write_split_csv(out, split_experiment(single, 2, 5));
    const auto text = out.str();
    CHECK(text.rfind("trial,seed,delta_one,delta_two\n0,", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}

TEST_CASE("gap table") {
    const auto rows = gap_table(12);
    REQUIRE(rows.size() == 12);

    CHECK(rows[0].k == 1);
    CHECK(rows[0].n == 1);
    CHECK(rows[0].s == 0);
    CHECK(rows[0].bound == 0);
    CHECK(rows[0].gap == Rational{0, 1});

    CHECK(rows[1].n == 4);
    CHECK(rows[1].s == 3);
    CHECK(rows[1].bound == 1);
    CHECK(rows[1].gap == Rational{1, 2});

    CHECK(rows[2].n == 13);
    CHECK(rows[2].s == 12);
    CHECK(rows[2].bound == 5);
    CHECK(rows[2].gap == Rational{1, 1});
    CHECK(rows[2].half_k_minus_1 == Rational{1, 1});

    for (const auto& r : rows) {
        CHECK(r.gap == r.half_k_minus_1);
        CHECK(r.bound == level_params(r.k).bound);
    }

    std::ostringstream out;
    write_gap_csv(out, gap_table(3));
    const auto text = out.str();
    CHECK(text.rfind("k,n,s,bound,gap_num,gap_den,log3_s\n1,1,0,0,0,1,", 0) == 0);
    CHECK(text.find("\n3,13,12,5,1,1,") != std::string::npos);
}

TEST_CASE("rationals") {
    CHECK(make_rational(4, 8) == Rational{1, 2});
    CHECK(make_rational(3, -6) == Rational{-1, 2});
    CHECK(make_rational(0, 5) == Rational{0, 1});
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}
