#pragma once

// Double, bordered double, and triple circulant codes built from header vectors.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circode/gf2.hpp"

namespace circode {

enum class Family { dcc, bordered_dcc, tcc };

std::string_view family_tag(Family f) noexcept;
/// Accepts "dcc", "bdcc", "tcc" (case-sensitive).
Family parse_family(std::string_view tag);

/// A header is the first row of a circulant block; the leftmost character is a0.
using Header = BitVector;

/// Family plus header(s). Shapes: DCC n=2r,k=r; TCC n=3r,k=r; bordered DCC n=2(r+1),k=r+1.
class CodeSpec {
public:
    static CodeSpec dcc(Header a);
    /// `corner` sets the top-left bit of the bordered block.
    static CodeSpec bordered_dcc(Header a, bool corner = false);
    static CodeSpec tcc(Header a, Header b);
    /// Validating constructor used by parsers; header lengths must equal r.
    static CodeSpec make(Family family, std::size_t r, Header a, std::optional<Header> b = std::nullopt,
                         bool corner = false);

    Family family() const noexcept { return family_; }
    std::size_t r() const noexcept { return header_a_.size(); }
    std::size_t n() const noexcept;
    std::size_t k() const noexcept;
    const Header& header_a() const noexcept { return header_a_; }
    const std::optional<Header>& header_b() const noexcept { return header_b_; }
    bool border_corner() const noexcept { return corner_; }

    /// Header bits as one string: a for DCC/bordered, a||b for TCC.
    BitVector concatenated_headers() const;
    /// Inverse of concatenated_headers for the same family/r.
    CodeSpec with_concatenated_headers(const BitVector& bits) const;

    friend bool operator==(const CodeSpec&, const CodeSpec&) = default;

private:
    CodeSpec(Family f, Header a, std::optional<Header> b, bool corner)
        : family_(f), header_a_(std::move(a)), header_b_(std::move(b)), corner_(corner) {}

    Family family_ = Family::dcc;
    Header header_a_;
    std::optional<Header> header_b_;
    bool corner_ = false;
};

/// r x r matrix whose row i is rotate_right(h, i).
BinaryMatrix build_circulant(const Header& h);

/// Systematic generator: [I|A], [I|A|B], or [I_{r+1}|A'] with A' bordering circ(h).
BinaryMatrix build_generator(const CodeSpec& spec);

BitVector encode_spec(const CodeSpec& spec, const BitVector& u);

/// Rotates every block of a codeword of a DCC/TCC by s positions; the result is again a codeword.
BitVector rotate_blocks(const BitVector& codeword, std::size_t block, std::size_t s);

/// Equivalent spec whose headers are rotated simultaneously to the lexicographically smallest
/// concatenation. Bordered specs are returned unchanged.
CodeSpec canonical_rotation(const CodeSpec& spec);
/// The s for which canonical_rotation rotates every header right by s (0 for bordered specs).
std::size_t canonical_shift(const CodeSpec& spec);

/// Maps a codeword of a DCC/TCC to the code whose headers are all rotated right by s: the
/// information block stays, each parity block rotates by s.
BitVector rotate_parity_blocks(const BitVector& codeword, std::size_t r, std::size_t s);

struct HeaderLine {
    CodeSpec spec;
    std::optional<std::size_t> claimed_d;
    std::size_t line_number = 0;
};

/// One line: family r header_a [header_b] [claimed_d]. Throws ParseError.
HeaderLine parse_header_line(std::string_view line);
/// Skips blank lines and lines starting with '#'. Errors carry the line number.
std::vector<HeaderLine> read_header_file(std::istream& in);
std::vector<HeaderLine> read_header_file(const std::string& path);

/// Inverse of parse_header_line (without line number).
std::string format_header_line(const CodeSpec& spec, std::optional<std::size_t> claimed_d = std::nullopt);

}  // namespace circode
