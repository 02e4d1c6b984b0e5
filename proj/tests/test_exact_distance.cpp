#include <doctest.h>

#include <random>

#include "circode/exact_distance.hpp"
#include "oracles.hpp"

using namespace circode;

namespace {

const BinaryMatrix kCode84 = BinaryMatrix::from_strings({"10001110", "01000111", "00101011", "00011101"});

BinaryMatrix identity_zero(std::size_t k, std::size_t n) {
    BinaryMatrix g(k, n);
    for (std::size_t i = 0; i < k; ++i) g.set(i, i);
    return g;
}

void check_witness(const BinaryMatrix& G, const DistanceEstimate& e) {
    REQUIRE(e.d.has_value());
    REQUIRE(e.witness.has_value());
    CHECK(e.witness->weight() == *e.d);
    CHECK(is_codeword(G, *e.witness));
    CHECK(oracle::is_codeword(oracle::rows(G), oracle::bits(*e.witness)));
}

}  // namespace

TEST_SUITE("exact_distance") {

TEST_CASE("brute force on small codes") {
    auto e = brute_force_distance(kCode84);
    CHECK(e.d == 4u);
    CHECK(e.exact);
    CHECK(e.work_units == 15);
    check_witness(kCode84, e);

    CHECK(brute_force_distance(identity_zero(5, 9)).d == 1u);
    const auto dcc = build_generator(CodeSpec::dcc(BitVector::from_string("011101001")));
    CHECK(brute_force_distance(dcc).d == 6u);
    CHECK(brute_force_distance(dcc).work_units == 511);
    CHECK_THROWS_AS(brute_force_distance(BinaryMatrix(30, 60)), UnsupportedInput);
    CHECK_THROWS_AS(brute_force_distance(kCode84, {3, 1}), UnsupportedInput);
}

TEST_CASE("brute force agrees with enumeration and ignores the thread count") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        const std::size_t k = 1 + rng() % 12, n = k + 1 + rng() % 20;
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < k; ++i) rows.push_back(oracle::random_bits(rng, n));
        const auto G = BinaryMatrix::from_strings(rows);
        if (rank(G) < k) continue;
        const auto e1 = brute_force_distance(G, {28, 1});
        const auto e4 = brute_force_distance(G, {28, 4});
        CHECK(*e1.d == oracle::min_distance(oracle::rows(G)));
        CHECK(e1.witness == e4.witness);
        CHECK(e1.work_units == e4.work_units);
        check_witness(G, e1);
    }
}

TEST_CASE("slice minimum over r rows") {
    CHECK(chen_slice(kCode84, 1).min_weight == 4);
    for (std::size_t r = 1; r <= 4; ++r) {
        CHECK(chen_slice(kCode84, r).min_weight == oracle::slice_min(oracle::rows(kCode84), r));
        CHECK(chen_slice(identity_zero(4, 7), r).min_weight == r);
    }
    CHECK(chen_slice(kCode84, 2).work_units == 6);
    CHECK_THROWS_AS(chen_slice(kCode84, 0), DimensionError);
    CHECK_THROWS_AS(chen_slice(kCode84, 5), DimensionError);
    CHECK_THROWS_AS(chen_slice(BinaryMatrix::from_strings({"01", "10"}), 1), DimensionError);
}

TEST_CASE("slices match the oracle on random systematic generators") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 30; ++t) {
        const std::size_t k = 2 + rng() % 10, n = k + 1 + rng() % 70;
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < k; ++i) {
            std::string s(k, '0');
            s[i] = '1';
            rows.push_back(s + oracle::random_bits(rng, n - k));
        }
        const auto G = BinaryMatrix::from_strings(rows);
        const auto ref = oracle::rows(G);
        for (std::size_t r = 1; r <= k; ++r) {
            const auto s1 = chen_slice(G, r, {1, false});
            const auto s3 = chen_slice(G, r, {3, false});
            CHECK(s1.min_weight == oracle::slice_min(ref, r));
            CHECK(s1.min_weight >= r);
            CHECK(s1.witness == s3.witness);
            CHECK(s1.witness.weight() == s1.min_weight);
            CHECK(is_codeword(G, s1.witness));
            CHECK(s1.work_units == slice_size(k, r, false));
        }
    }
}

TEST_CASE("chen sweep") {
    auto e = chen_distance(kCode84, {4});
    CHECK(e.d == 4u);
    CHECK(e.exact);
    auto partial = chen_distance(kCode84, {2});
    CHECK(partial.d == 4u);
    CHECK_FALSE(partial.exact);
    CHECK(chen_distance(identity_zero(3, 6)).d == 1u);

    // Non-increasing in r_cap, always an upper bound.
    const auto G = build_generator(CodeSpec::dcc(BitVector::from_string("0110100010111")));
    const std::size_t truth = *brute_force_distance(G).d;
    std::size_t prev = G.cols() + 1;
    for (std::size_t cap = 1; cap <= G.rows(); ++cap) {
        const auto c = chen_distance(G, {cap});
        CHECK(*c.d <= prev);
        CHECK(*c.d >= truth);
        check_witness(G, c);
        prev = *c.d;
    }
    CHECK(prev == truth);

    ChenOptions tight;
    tight.max_work = 5;
    const auto budgeted = chen_distance(G, tight);
    CHECK(budgeted.work_units <= 5);
    CHECK_FALSE(budgeted.exact);
}

TEST_CASE("cyclic stopping rule") {
    // [7,4] Hamming code, cyclic, systematic form.
    const auto G = BinaryMatrix::from_strings({"1000110", "0100011", "0010111", "0001101"});
    ChenOptions o;
    o.cyclic = true;
    const auto e = chen_distance(G, o);
    CHECK(e.d == 3u);
    CHECK(e.exact);
    CHECK(e.work_units < slice_size(4, 1, false) + slice_size(4, 2, false) + slice_size(4, 3, false));
}

TEST_CASE("circulant exact search") {
    const auto tcc = CodeSpec::tcc(BitVector::from_string("001010011011"), BitVector::from_string("100100000111"));
    auto e = circulant_exact_distance(tcc);
    CHECK(e.d == 12u);
    CHECK(e.exact);
    check_witness(build_generator(tcc), e);

    // Force the slice route even though k is small.
    CirculantExactOptions no_brute;
    no_brute.brute_force_cap = 0;
    const auto s = circulant_exact_distance(tcc, no_brute);
    CHECK(s.d == 12u);
    CHECK(s.exact);
    CHECK(s.method == Method::circulant_exact);

    const auto eye = CodeSpec::dcc(BitVector::from_string("000000001"));
    CHECK(circulant_exact_distance(eye, no_brute).d == 2u);
    CHECK(circulant_exact_distance(eye, no_brute).exact);

    const auto ex = CodeSpec::dcc(BitVector::from_string("011101001"));
    CHECK(circulant_exact_distance(ex).d == 6u);
    CHECK(circulant_exact_distance(ex, no_brute).d == 6u);
    CHECK(circulant_exact_distance(ex, no_brute).exact);

    // Bordered codes go to brute force when small.
    const auto b = CodeSpec::bordered_dcc(BitVector::from_string("011101001"), true);
    CHECK(*circulant_exact_distance(b).d == oracle::min_distance(oracle::rows(build_generator(b))));
}

TEST_CASE("systematic views generate the same code") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        const std::size_t r = 3 + rng() % 8;
        const auto spec = CodeSpec::tcc(BitVector::from_string(oracle::random_bits(rng, r)),
                                        BitVector::from_string(oracle::random_bits(rng, r)));
        const auto G = build_generator(spec);
        const auto views = circulant_systematic_views(spec);
        REQUIRE_FALSE(views.empty());
        CHECK(views.front().generator == G);
        for (const auto& v : views) {
            CHECK(is_systematic(v.generator));
            for (std::size_t i = 0; i < v.generator.rows(); ++i) {
                BitVector back(G.cols());
                for (std::size_t j = 0; j < G.cols(); ++j)
                    if (v.generator.get(i, j)) back.set(v.column_map[j]);
                CHECK(is_codeword(G, back));
            }
        }
    }
    CHECK_THROWS_AS(circulant_systematic_views(CodeSpec::bordered_dcc(BitVector::from_string("011"))), UnsupportedInput);
}

TEST_CASE("exact methods agree on random circulant codes, for every form order") {
    std::mt19937_64 rng(2024);
    CirculantExactOptions slices;
    slices.brute_force_cap = 0;
    for (int t = 0; t < 120; ++t) {
        const std::size_t r = 3 + rng() % 14;  // k <= 16
        const bool triple = t % 3 == 0;
        const auto a = BitVector::from_string(oracle::random_bits(rng, r));
        const auto spec = triple ? CodeSpec::tcc(a, BitVector::from_string(oracle::random_bits(rng, r))) : CodeSpec::dcc(a);
        const auto G = build_generator(spec);
        const std::size_t brute = *brute_force_distance(G).d;
        std::size_t sweep = G.cols();
        for (std::size_t rr = 1; rr <= G.rows(); ++rr) sweep = std::min(sweep, chen_slice(G, rr).min_weight);
        CHECK(sweep == brute);
        const auto ce = circulant_exact_distance(spec, slices);
        CHECK(ce.exact);
        CHECK(*ce.d == brute);
        check_witness(G, ce);
        auto reversed = slices;
        const std::size_t forms = circulant_systematic_views(spec).size();
        for (std::size_t f = forms; f-- > 0;) reversed.form_order.push_back(f);
        CHECK(*circulant_exact_distance(spec, reversed).d == brute);
        auto threaded = slices;
        threaded.threads = 3;
        const auto ct = circulant_exact_distance(spec, threaded);
        CHECK(ct.witness == ce.witness);
        CHECK(ct.work_units == ce.work_units);
    }
}

TEST_CASE("method tags") {
    for (Method m : {Method::brute_force, Method::chen, Method::circulant_exact, Method::ga_message, Method::mim, Method::mim_ga})
        CHECK(parse_method(method_tag(m)) == m);
    CHECK_THROWS_AS(parse_method("exhaustive"), ParseError);
}

}  // TEST_SUITE
