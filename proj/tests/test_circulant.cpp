#include <doctest.h>

#include <random>
#include <sstream>

#include "circode/circulant.hpp"
#include "circode/exact_distance.hpp"
#include "oracles.hpp"

using namespace circode;

namespace {

// Identity block plus the printed circulant rows of the (18,9) and (27,9) worked examples.
const std::vector<std::string> kDccA = {"011101001", "101110100", "010111010", "001011101", "100101110",
                                        "010010111", "101001011", "110100101", "111010010"};
const std::vector<std::string> kTccB = {"110110110", "011011011", "101101101", "110110110", "011011011",
                                        "101101101", "110110110", "011011011", "101101101"};

std::string unit_row(std::size_t i, std::size_t k) {
    std::string s(k, '0');
    s[i] = '1';
    return s;
}

}  // namespace

TEST_SUITE("circulant") {

TEST_CASE("circulant rows are successive right rotations") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 40; ++t) {
        const std::size_t r = 1 + rng() % 40;
        const auto h = oracle::random_bits(rng, r);
        CHECK(oracle::rows(build_circulant(BitVector::from_string(h))) == oracle::circulant(oracle::bits(h)));
    }
}

TEST_CASE("(18,9) double circulant generator") {
    const auto G = build_generator(CodeSpec::dcc(BitVector::from_string("011101001")));
    REQUIRE(G.rows() == 9);
    REQUIRE(G.cols() == 18);
    for (std::size_t i = 0; i < 9; ++i) CHECK(G.row(i).to_string() == unit_row(i, 9) + kDccA[i]);
}

TEST_CASE("(27,9) triple circulant generator") {
    const auto G = build_generator(CodeSpec::tcc(BitVector::from_string("011101001"), BitVector::from_string("110110110")));
    REQUIRE(G.cols() == 27);
    for (std::size_t i = 0; i < 9; ++i) CHECK(G.row(i).to_string() == unit_row(i, 9) + kDccA[i] + kTccB[i]);
}

TEST_CASE("small dcc prints as expected") {
    CHECK(matrix_to_string(build_generator(CodeSpec::dcc(BitVector::from_string("10")))) == "4 2\n1010\n0101\n");
}

TEST_CASE("shapes and validation") {
    const auto a = BitVector::from_string("0111");
    CHECK(CodeSpec::dcc(a).n() == 8);
    CHECK(CodeSpec::dcc(a).k() == 4);
    CHECK(CodeSpec::tcc(a, a).n() == 12);
    CHECK(CodeSpec::tcc(a, a).k() == 4);
    CHECK(CodeSpec::bordered_dcc(a).n() == 10);
    CHECK(CodeSpec::bordered_dcc(a).k() == 5);
    CHECK_THROWS_AS(CodeSpec::make(Family::dcc, 5, a), DimensionError);
    CHECK_THROWS_AS(CodeSpec::make(Family::tcc, 4, a), DimensionError);
    CHECK_THROWS_AS(CodeSpec::make(Family::tcc, 4, a, BitVector::from_string("011")), DimensionError);
    CHECK_THROWS_AS(CodeSpec::make(Family::dcc, 4, a, a), DimensionError);
    CHECK_THROWS_AS(parse_family("qcc"), ParseError);
    CHECK(parse_family("bdcc") == Family::bordered_dcc);
}

TEST_CASE("bordered generator layout") {
    const auto G = build_generator(CodeSpec::bordered_dcc(BitVector::from_string("011"), true));
    CHECK(matrix_to_string(G) ==
          "8 4\n"
          "10001111\n"
          "01001011\n"
          "00101101\n"
          "00011110\n");
    const auto G0 = build_generator(CodeSpec::bordered_dcc(BitVector::from_string("011"), false));
    CHECK(G0.row(0).to_string() == "10000111");
}

TEST_CASE("every generated matrix is systematic with a consistent parity check") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 30; ++t) {
        const std::size_t r = 2 + rng() % 12;
        const auto a = BitVector::from_string(oracle::random_bits(rng, r));
        const auto b = BitVector::from_string(oracle::random_bits(rng, r));
        for (const auto& spec : {CodeSpec::dcc(a), CodeSpec::tcc(a, b), CodeSpec::bordered_dcc(a, t % 2 == 0)}) {
            const auto G = build_generator(spec);
            CHECK(is_systematic(G));
            const auto H = parity_check_from_systematic(G);
            for (std::size_t i = 0; i < G.rows(); ++i) CHECK(satisfies_parity(H, G.row(i)));
        }
    }
}

TEST_CASE("simultaneous block rotation preserves the code") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) {
        const std::size_t r = 3 + rng() % 8;
        const auto spec = CodeSpec::tcc(BitVector::from_string(oracle::random_bits(rng, r)),
                                        BitVector::from_string(oracle::random_bits(rng, r)));
        const auto G = build_generator(spec);
        const auto H = parity_check_from_systematic(G);
        BitVector u = BitVector::from_string(oracle::random_bits(rng, r));
        const auto c = encode(G, u);
        for (std::size_t s = 0; s < r; ++s) CHECK(satisfies_parity(H, rotate_blocks(c, r, s)));
    }
}

TEST_CASE("canonical rotation is the smallest rotation and gives the same distance") {
    const auto spec = CodeSpec::dcc(BitVector::from_string("100110000"));
    const auto canon = canonical_rotation(spec);
    CHECK(canon.header_a().to_string() == "000010011");
    CHECK(canonical_rotation(canon) == canon);

    std::mt19937_64 rng(14);
    for (int t = 0; t < 25; ++t) {
        const std::size_t r = 3 + rng() % 7;
        const auto s = CodeSpec::tcc(BitVector::from_string(oracle::random_bits(rng, r)),
                                     BitVector::from_string(oracle::random_bits(rng, r)));
        const auto c = canonical_rotation(s);
        for (std::size_t k = 0; k < r; ++k) CHECK(c.concatenated_headers() <= rotate_blocks(s.concatenated_headers(), r, k));
        CHECK(oracle::min_distance(oracle::rows(build_generator(s))) == oracle::min_distance(oracle::rows(build_generator(c))));

        // Codewords carry over by rotating the parity blocks.
        const std::size_t shift = canonical_shift(s);
        const auto Hc = parity_check_from_systematic(build_generator(c));
        const auto cw = encode(build_generator(s), BitVector::from_string(oracle::random_bits(rng, r)));
        CHECK(satisfies_parity(Hc, rotate_parity_blocks(cw, r, shift)));
    }
    const auto bordered = CodeSpec::bordered_dcc(BitVector::from_string("100"));
    CHECK(canonical_rotation(bordered) == bordered);
}

TEST_CASE("header lines") {
    const auto l = parse_header_line("tcc 12 001010011011 100100000111 12");
    CHECK(l.spec.family() == Family::tcc);
    CHECK(l.spec.r() == 12);
    CHECK(l.claimed_d == 12u);
    CHECK(format_header_line(l.spec, 12) == "tcc 12 001010011011 100100000111 12");
    CHECK_FALSE(parse_header_line("dcc 3 011").claimed_d.has_value());
    CHECK_THROWS_AS(parse_header_line("dcc 3 0110"), ParseError);
    CHECK_THROWS_AS(parse_header_line("dcc three 011"), ParseError);
    CHECK_THROWS_AS(parse_header_line("tcc 3 011"), ParseError);
    CHECK_THROWS_AS(parse_header_line("dcc 3 011 4 extra"), ParseError);

    std::istringstream file("# comment\n\ndcc 3 011 2\ndcc 3 0x1\n");
    CHECK_THROWS_WITH_AS(read_header_file(file), doctest::Contains("line 4"), ParseError);
    std::istringstream good("# ok\ndcc 2 10 2\n\ntcc 3 011 110\n");
    const auto lines = read_header_file(good);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].line_number == 2);
    CHECK(lines[1].line_number == 4);
}

}  // TEST_SUITE
