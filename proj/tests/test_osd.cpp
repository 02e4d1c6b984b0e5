#include <doctest.h>

#include <random>

#include "circode/circulant.hpp"
#include "circode/osd.hpp"
#include "oracles.hpp"

using namespace circode;

namespace {

const BinaryMatrix kCode84 = BinaryMatrix::from_strings({"10001110", "01000111", "00101011", "00011101"});

std::uint64_t binomial_sum(std::size_t k, std::size_t order) {
    std::uint64_t total = 0;
    for (std::size_t j = 0; j <= order; ++j) {
        std::uint64_t c = 1;
        for (std::size_t i = 0; i < j; ++i) c = c * (k - i) / (i + 1);
        total += c;
    }
    return total;
}

BinaryMatrix random_full_rank(std::mt19937_64& rng, std::size_t k, std::size_t n) {
    for (;;) {
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < k; ++i) rows.push_back(oracle::random_bits(rng, n));
        auto G = BinaryMatrix::from_strings(rows);
        if (rank(G) == k) return G;
    }
}

}  // namespace

TEST_SUITE("osd") {

TEST_CASE("modulation") {
    CHECK(modulate(BitVector::from_string("0110")) == SoftVector{1.0, -1.0, -1.0, 1.0});
}

TEST_CASE("noiseless codewords are fixed points") {
    std::mt19937_64 rng(1);
    for (int code = 0; code < 20; ++code) {
        const std::size_t k = 2 + rng() % 20, n = k + 1 + rng() % 60;
        const auto G = random_full_rank(rng, k, n);
        const OsdDecoder dec(G);
        for (int t = 0; t < 50; ++t) {
            const auto c = encode(G, BitVector::from_string(oracle::random_bits(rng, k)));
            const auto res = dec.decode(modulate(c), 1 + rng() % 2);
            CHECK(res.codeword == c);
            CHECK(res.score == doctest::Approx(0.0));
        }
    }
}

TEST_CASE("order-k decoding is maximum likelihood") {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> noise(0.0, 0.9);
    const auto ref = oracle::rows(kCode84);
    for (int t = 0; t < 1000; ++t) {
        SoftVector y(8);
        const auto c = encode(kCode84, BitVector::from_string(oracle::random_bits(rng, 4)));
        for (std::size_t j = 0; j < 8; ++j) y[j] = (c.get(j) ? -1.0 : 1.0) + noise(rng);
        const auto res = osd_decode(kCode84, y, 4);
        CHECK(oracle::bits(res.codeword) == oracle::ml_decode(ref, y));
    }
}

TEST_CASE("order-k equals ML on random codes as well") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (int code = 0; code < 15; ++code) {
        const std::size_t k = 2 + rng() % 7, n = k + 2 + rng() % 10;
        const auto G = random_full_rank(rng, k, n);
        const auto ref = oracle::rows(G);
        for (int t = 0; t < 40; ++t) {
            SoftVector y(n);
            for (auto& v : y) v = (rng() & 1U ? -1.0 : 1.0) + noise(rng);
            CHECK(oracle::bits(osd_decode(G, y, k).codeword) == oracle::ml_decode(ref, y));
        }
    }
}

TEST_CASE("candidate accounting") {
    for (std::size_t k : {1, 4, 9, 30, 64})
        for (std::size_t order = 0; order <= std::min<std::size_t>(k, 4); ++order)
            CHECK(osd_candidate_count(k, order) == binomial_sum(k, order));
    const auto G = build_generator(CodeSpec::dcc(BitVector::from_string("011101001")));
    SoftVector y(18, 1.0);
    y[3] = -0.2;
    CHECK(osd_decode(G, y, 2).candidates == 1 + 9 + 36);
    CHECK(osd_decode(kCode84, modulate(BitVector(8)), 4).candidates == 16);
}

TEST_CASE("trace: reliability order and basis") {
    const SoftVector y{0.1, -2.0, 0.5, 1.5, -0.3, 0.05, 0.9, -1.2};
    OsdTrace trace;
    OsdDecoder(kCode84).decode(y, 1, &trace);
    CHECK(trace.reliability_order == std::vector<std::size_t>{1, 3, 7, 6, 2, 4, 0, 5});
    REQUIRE(trace.mrb.size() == 4);
    // The basis columns must be independent.
    BinaryMatrix cols(4, 4);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) cols.set(i, j, kCode84.get(i, trace.mrb[j]));
    CHECK(rank(cols) == 4);
    CHECK(trace.mrb.front() == 1);
}

TEST_CASE("decoder output is always a codeword and never worse than the hard-decision re-encoding") {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> noise(0.0, 1.2);
    const auto G = build_generator(CodeSpec::tcc(BitVector::from_string("001010011011"), BitVector::from_string("100100000111")));
    const auto H = parity_check_from_systematic(G);
    for (int t = 0; t < 200; ++t) {
        SoftVector y(G.cols());
        for (auto& v : y) v = 1.0 + noise(rng);
        const auto r0 = osd_decode(G, y, 0);
        const auto r2 = osd_decode(G, y, 2);
        CHECK(satisfies_parity(H, r0.codeword));
        CHECK(satisfies_parity(H, r2.codeword));
        CHECK(r2.score <= r0.score + 1e-9);
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(OsdDecoder(BinaryMatrix::from_strings({"110", "110"})), DimensionError);
    CHECK_THROWS_AS(osd_decode(kCode84, SoftVector(7, 1.0), 1), DimensionError);
    CHECK_THROWS_AS(osd_decode(kCode84, SoftVector(8, 1.0), 5), DimensionError);
}

}  // TEST_SUITE
