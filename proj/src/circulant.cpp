#include "circode/circulant.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace circode {

std::string_view family_tag(Family f) noexcept {
    switch (f) {
        case Family::dcc: return "dcc";
        case Family::bordered_dcc: return "bdcc";
        case Family::tcc: return "tcc";
    }
    return "dcc";
}

Family parse_family(std::string_view tag) {
    if (tag == "dcc") return Family::dcc;
    if (tag == "bdcc") return Family::bordered_dcc;
    if (tag == "tcc") return Family::tcc;
    throw ParseError("unknown code family '" + std::string(tag) + "' (expected dcc, bdcc or tcc)");
}

CodeSpec CodeSpec::dcc(Header a) { return make(Family::dcc, a.size(), std::move(a)); }

CodeSpec CodeSpec::bordered_dcc(Header a, bool corner) {
    const std::size_t r = a.size();
    return make(Family::bordered_dcc, r, std::move(a), std::nullopt, corner);
}

CodeSpec CodeSpec::tcc(Header a, Header b) {
    const std::size_t r = a.size();
    return make(Family::tcc, r, std::move(a), std::move(b));
}

CodeSpec CodeSpec::make(Family family, std::size_t r, Header a, std::optional<Header> b, bool corner) {
    if (r == 0) throw DimensionError("circulant block size r must be at least 1");
    if (a.size() != r)
        throw DimensionError("header a has length " + std::to_string(a.size()) + ", expected r = " + std::to_string(r));
    if (family == Family::tcc) {
        if (!b) throw DimensionError("tcc requires two headers");
        if (b->size() != r)
            throw DimensionError("header b has length " + std::to_string(b->size()) + ", expected r = " +
                                 std::to_string(r));
    } else if (b) {
        throw DimensionError(std::string(family_tag(family)) + " takes a single header");
    }
    return CodeSpec(family, std::move(a), std::move(b), family == Family::bordered_dcc && corner);
}

std::size_t CodeSpec::n() const noexcept {
    switch (family_) {
        case Family::dcc: return 2 * r();
        case Family::bordered_dcc: return 2 * (r() + 1);
        case Family::tcc: return 3 * r();
    }
    return 0;
}

std::size_t CodeSpec::k() const noexcept { return family_ == Family::bordered_dcc ? r() + 1 : r(); }

BitVector CodeSpec::concatenated_headers() const {
    return family_ == Family::tcc ? concat(header_a_, *header_b_) : header_a_;
}

CodeSpec CodeSpec::with_concatenated_headers(const BitVector& bits) const {
    if (family_ == Family::tcc) {
        if (bits.size() != 2 * r()) throw DimensionError("tcc header string must have length 2r");
        return make(family_, r(), bits.slice(0, r()), bits.slice(r(), r()));
    }
    return make(family_, r(), bits, std::nullopt, corner_);
}

BinaryMatrix build_circulant(const Header& h) {
    const std::size_t r = h.size();
    BinaryMatrix a(r, r);
    for (std::size_t i = 0; i < r; ++i) a.set_row(i, rotate_right(h, i));
    return a;
}

BinaryMatrix build_generator(const CodeSpec& spec) {
    const std::size_t r = spec.r();
    switch (spec.family()) {
        case Family::dcc:
            return hconcat(BinaryMatrix::identity(r), build_circulant(spec.header_a()));
        case Family::tcc:
            return hconcat(hconcat(BinaryMatrix::identity(r), build_circulant(spec.header_a())),
                           build_circulant(*spec.header_b()));
        case Family::bordered_dcc: {
            const BinaryMatrix b = build_circulant(spec.header_a());
            BinaryMatrix border(r + 1, r + 1);
            border.set(0, 0, spec.border_corner());
            for (std::size_t j = 1; j <= r; ++j) border.set(0, j);
            for (std::size_t i = 1; i <= r; ++i) {
                border.set(i, 0);
                for (std::size_t j = 0; j < r; ++j) border.set(i, j + 1, b.get(i - 1, j));
            }
            return hconcat(BinaryMatrix::identity(r + 1), border);
        }
    }
    throw DimensionError("unsupported family");
}

BitVector encode_spec(const CodeSpec& spec, const BitVector& u) { return encode(build_generator(spec), u); }

BitVector rotate_blocks(const BitVector& codeword, std::size_t block, std::size_t s) {
    if (block == 0 || codeword.size() % block != 0) throw DimensionError("rotate_blocks: length is not a multiple of the block size");
    BitVector out(codeword.size());
    for (std::size_t first = 0; first < codeword.size(); first += block)
        out.assign_range(first, rotate_right(codeword.slice(first, block), s));
    return out;
}

std::size_t canonical_shift(const CodeSpec& spec) {
    if (spec.family() == Family::bordered_dcc) return 0;
    const std::size_t r = spec.r();
    const BitVector bits = spec.concatenated_headers();
    BitVector best = bits;
    std::size_t best_s = 0;
    for (std::size_t s = 1; s < r; ++s) {
        BitVector cand = rotate_blocks(bits, r, s);
        if (cand < best) {
            best = std::move(cand);
            best_s = s;
        }
    }
    return best_s;
}

CodeSpec canonical_rotation(const CodeSpec& spec) {
    const std::size_t s = canonical_shift(spec);
    if (s == 0) return spec;
    return spec.with_concatenated_headers(rotate_blocks(spec.concatenated_headers(), spec.r(), s));
}

BitVector rotate_parity_blocks(const BitVector& codeword, std::size_t r, std::size_t s) {
    if (r == 0 || codeword.size() % r != 0) throw DimensionError("rotate_parity_blocks: length is not a multiple of r");
    BitVector out = codeword;
    for (std::size_t first = r; first < codeword.size(); first += r)
        out.assign_range(first, rotate_right(codeword.slice(first, r), s));
    return out;
}

namespace {

std::size_t parse_count(std::string_view tok, const char* what) {
    std::size_t v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError(std::string(what) + " must be a non-negative integer, got '" + std::string(tok) + "'");
    return v;
}

}  // namespace

HeaderLine parse_header_line(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    if (tok.size() < 3) throw ParseError("header line needs at least: family r header_a");

    const Family fam = parse_family(tok[0]);
    const std::size_t r = parse_count(tok[1], "r");
    Header a = BitVector::from_string(tok[2]);
    std::optional<Header> b;
    std::size_t next = 3;
    if (fam == Family::tcc) {
        if (tok.size() < 4) throw ParseError("tcc line needs header_b");
        b = BitVector::from_string(tok[3]);
        next = 4;
    }
    std::optional<std::size_t> claimed;
    if (tok.size() > next) claimed = parse_count(tok[next++], "claimed_d");
    if (tok.size() > next) throw ParseError("unexpected trailing field '" + tok[next] + "'");
    try {
        return HeaderLine{CodeSpec::make(fam, r, std::move(a), std::move(b)), claimed, 0};
    } catch (const DimensionError& e) {
        throw ParseError(e.what());
    }
}

std::vector<HeaderLine> read_header_file(std::istream& in) {
    std::vector<HeaderLine> out;
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            HeaderLine h = parse_header_line(line);
            h.line_number = no;
            out.push_back(std::move(h));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(no) + ": " + e.what());
        }
    }
    return out;
}

std::vector<HeaderLine> read_header_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open header file: " + path);
    return read_header_file(in);
}

std::string format_header_line(const CodeSpec& spec, std::optional<std::size_t> claimed_d) {
    std::string s = std::string(family_tag(spec.family())) + ' ' + std::to_string(spec.r()) + ' ' +
                    spec.header_a().to_string();
    if (spec.header_b()) s += ' ' + spec.header_b()->to_string();
    if (claimed_d) s += ' ' + std::to_string(*claimed_d);
    return s;
}

}  // namespace circode
