#include <doctest.h>

#include <random>

#include "circode/circulant.hpp"
#include "circode/estimators.hpp"
#include "circode/exact_distance.hpp"
#include "oracles.hpp"

using namespace circode;

namespace {

const BinaryMatrix kCode84 = BinaryMatrix::from_strings({"10001110", "01000111", "00101011", "00011101"});
const BinaryMatrix kDcc9 = build_generator(CodeSpec::dcc(BitVector::from_string("011101001")));

void check_upper_bound(const BinaryMatrix& G, const DistanceEstimate& e, std::size_t truth) {
    REQUIRE(e.d.has_value());
    REQUIRE(e.witness.has_value());
    CHECK(e.witness->weight() == *e.d);
    CHECK(is_codeword(G, *e.witness));
    CHECK(*e.d >= truth);
    CHECK_FALSE(e.exact);
}

MimGaParams quick_ga(std::uint64_t seed) {
    MimGaParams p;
    p.generations = 300;
    p.seed = seed;
    return p;
}

}  // namespace

TEST_SUITE("estimators") {

TEST_CASE("mim on small codes") {
    MimParams p;
    p.seed = 1;
    const auto e = mim_estimate(kCode84, p);
    CHECK(e.d == 4u);
    check_upper_bound(kCode84, e, 4);
    CHECK(e.seed == 1u);
    p.seed = 7;
    CHECK(mim_estimate(kDcc9, p).d == 6u);

    BinaryMatrix zero_parity(4, 9);
    for (std::size_t i = 0; i < 4; ++i) zero_parity.set(i, i);
    CHECK(mim_estimate(zero_parity, p).d == 1u);
}

TEST_CASE("mim is deterministic and independent of threads") {
    MimParams p;
    p.seed = 99;
    p.nb_test = 5;
    const auto a = mim_estimate(kDcc9, p);
    p.threads = 4;
    const auto b = mim_estimate(kDcc9, p);
    CHECK(a.d == b.d);
    CHECK(a.witness == b.witness);
    CHECK(a.work_units == b.work_units);
}

TEST_CASE("mim parameter validation") {
    MimParams p;
    p.d0 = 0;
    CHECK_THROWS_AS(mim_estimate(kCode84, p), std::invalid_argument);
    p = {};
    p.d1 = 6;  // n - k + 1 = 5
    CHECK_THROWS_AS(mim_estimate(kCode84, p), std::invalid_argument);
    p = {};
    p.d0 = 4;
    p.d1 = 3;
    CHECK_THROWS_AS(mim_estimate(kCode84, p), std::invalid_argument);
    p = {};
    p.nb_test = 0;
    CHECK_THROWS_AS(mim_estimate(kCode84, p), std::invalid_argument);
    p = {};
    p.osd_order = 5;
    CHECK_THROWS_AS(mim_estimate(kCode84, p), std::invalid_argument);
}

TEST_CASE("mim-ga") {
    const auto e = mim_ga_estimate(kCode84, quick_ga(1));
    CHECK(e.d == 4u);
    check_upper_bound(kCode84, e, 4);
    CHECK(mim_ga_estimate(kDcc9, quick_ga(2)).d == 6u);

    auto p = quick_ga(5);
    p.generations = 40;
    const auto a = mim_ga_estimate(kDcc9, p);
    p.threads = 3;
    const auto b = mim_ga_estimate(kDcc9, p);
    CHECK(a.witness == b.witness);
    CHECK(a.work_units == b.work_units);

    p.mutation_per_gene = false;
    check_upper_bound(kDcc9, mim_ga_estimate(kDcc9, p), 6);

    p = quick_ga(1);
    p.population = 1;
    CHECK_THROWS_AS(mim_ga_estimate(kCode84, p), std::invalid_argument);
    p = quick_ga(1);
    p.nb_error = 9;
    CHECK_THROWS_AS(mim_ga_estimate(kCode84, p), std::invalid_argument);
    p = quick_ga(1);
    p.p_crossover = 1.5;
    CHECK_THROWS_AS(mim_ga_estimate(kCode84, p), std::invalid_argument);
}

TEST_CASE("ga over messages") {
    GaMsgParams p;
    p.seed = 3;
    const auto e = ga_message_distance(kCode84, p);
    CHECK(e.d == 4u);
    check_upper_bound(kCode84, e, 4);
    CHECK(ga_message_distance(kDcc9, p).d == 6u);

    BinaryMatrix zero_parity(5, 9);
    for (std::size_t i = 0; i < 5; ++i) zero_parity.set(i, i);
    CHECK(ga_message_distance(zero_parity, p).d == 1u);

    for (auto kind : {CrossoverKind::one_point, CrossoverKind::two_point, CrossoverKind::uniform}) {
        p.crossover = kind;
        check_upper_bound(kDcc9, ga_message_distance(kDcc9, p), 6);
    }

    p = {};
    p.seed = 8;
    const auto a = ga_message_distance(kDcc9, p);
    p.threads = 4;
    const auto b = ga_message_distance(kDcc9, p);
    CHECK(a.witness == b.witness);
    CHECK(a.work_units == b.work_units);
    // Only new individuals are encoded: fewer than population * generations encodes.
    CHECK(a.work_units < 60u * 150u);
    CHECK(a.work_units >= 60u);

    p.elite = p.population;
    CHECK_THROWS_AS(ga_message_distance(kDcc9, p), std::invalid_argument);
}

TEST_CASE("crossover operators") {
    Rng rng(1);
    const auto zero = BitVector::from_string("0000");
    const auto one = BitVector::from_string("1111");
    for (auto kind : {CrossoverKind::one_point, CrossoverKind::two_point, CrossoverKind::uniform}) {
        const auto [c1, c2] = crossover(one, one, kind, rng);
        CHECK(c1 == one);
        CHECK(c2 == one);
        const auto [d1, d2] = crossover(zero, one, kind, rng);
        CHECK((d1 ^ d2) == one);
    }
    const auto [s1, s2] = apply_mask(zero, one, one_point_mask(4, 0));
    CHECK(s1 == one);
    CHECK(s2 == zero);
    const auto [t1, t2] = apply_mask(zero, one, two_point_mask(4, 1, 3));
    CHECK(t1.to_string() == "0110");
    CHECK(t2.to_string() == "1001");
    const SoftVector a{1, 2, 3, 4}, b{5, 6, 7, 8};
    const auto [u1, u2] = apply_mask(a, b, one_point_mask(4, 2));
    CHECK(u1 == SoftVector{1, 2, 7, 8});
    CHECK(u2 == SoftVector{5, 6, 3, 4});
    CHECK_THROWS_AS(apply_mask(zero, BitVector(3), one_point_mask(4, 1)), DimensionError);
    CHECK(parse_crossover(crossover_tag(CrossoverKind::uniform)) == CrossoverKind::uniform);

    // Uniform mixing takes about half of each parent.
    std::size_t from_second = 0;
    for (int t = 0; t < 20; ++t) from_second += crossover_mask(CrossoverKind::uniform, 1000, rng).weight();
    CHECK(from_second > 9000);
    CHECK(from_second < 11000);
}

TEST_CASE("amplitude split") {
    Rng rng(4);
    for (std::size_t parts = 1; parts < 10; ++parts) {
        const auto s = split_amplitude(7.5, parts, rng);
        REQUIRE(s.size() == parts);
        double total = 0;
        for (double x : s) {
            CHECK(x >= 0.0);
            total += x;
        }
        CHECK(total == doctest::Approx(7.5));
    }
}

TEST_CASE("all estimators match brute force on small random double circulant codes") {
    std::mt19937_64 rng(404);
    int misses = 0;
    for (int t = 0; t < 25; ++t) {
        const std::size_t r = 5 + rng() % 7;
        const auto G = build_generator(CodeSpec::dcc(BitVector::from_string(oracle::random_bits(rng, r))));
        const std::size_t truth = oracle::min_distance(oracle::rows(G));
        MimParams mp;
        mp.seed = t;
        GaMsgParams gp;
        gp.seed = t;
        for (const auto& e : {mim_estimate(G, mp), mim_ga_estimate(G, quick_ga(t)), ga_message_distance(G, gp)}) {
            check_upper_bound(G, e, truth);
            if (*e.d != truth) ++misses;
        }
    }
    CHECK(misses <= 2);
}

}  // TEST_SUITE
