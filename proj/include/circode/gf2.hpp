#pragma once

// Bit-packed GF(2) vectors and matrices.
//
// Position 0 of a vector is the leftmost character of its textual form, and
// lives in bit 0 of word 0. Bits past size() are always zero so weight() can
// use a raw population count.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace circode {

/// Thrown when operand shapes do not agree.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown on malformed textual input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BitVector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

    /// Parses a string of '0'/'1' characters; any other character is an error.
    static BitVector from_string(std::string_view bits);
    /// Unit vector e_i of the given length.
    static BitVector unit(std::size_t length, std::size_t i);

    static constexpr std::size_t word_count(std::size_t length) noexcept {
        return (length + kWordBits - 1) / kWordBits;
    }

    std::size_t size() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }

    bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value = true) noexcept {
        const Word mask = Word{1} << (i % kWordBits);
        if (value)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    std::size_t weight() const noexcept {
        std::size_t w = 0;
        for (Word x : words_) w += static_cast<std::size_t>(std::popcount(x));
        return w;
    }
    bool is_zero() const noexcept {
        for (Word x : words_)
            if (x != 0) return false;
        return true;
    }

    std::span<const Word> words() const noexcept { return words_; }
    /// Raw word access. Callers writing through this span must leave the tail clear
    /// (or call clear_tail()).
    std::span<Word> words_mut() noexcept { return words_; }
    void clear_tail() noexcept;

    BitVector& operator^=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);
    BitVector& operator|=(const BitVector& other);

    /// Copy of bits [first, first + count).
    BitVector slice(std::size_t first, std::size_t count) const;
    /// Writes `src` into positions [first, first + src.size()).
    void assign_range(std::size_t first, const BitVector& src);

    std::string to_string() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;
    /// Orders by length, then by textual (position 0 first) lexicographic order.
    friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

private:
    std::size_t length_ = 0;
    std::vector<Word> words_;
};

BitVector operator^(BitVector a, const BitVector& b);
BitVector operator&(BitVector a, const BitVector& b);
BitVector operator|(BitVector a, const BitVector& b);

inline std::size_t weight(const BitVector& v) noexcept { return v.weight(); }

/// Bit j of the result is bit (j - s) mod size of v.
BitVector rotate_right(const BitVector& v, std::size_t s);

/// Concatenation a || b.
BitVector concat(const BitVector& a, const BitVector& b);

std::ostream& operator<<(std::ostream& os, const BitVector& v);

class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

    static BinaryMatrix identity(std::size_t n);
    /// All rows must share one length.
    static BinaryMatrix from_rows(std::vector<BitVector> rows);
    static BinaryMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const BitVector& row(std::size_t i) const noexcept { return data_[i]; }
    void set_row(std::size_t i, BitVector v);
    std::span<const BitVector> row_span() const noexcept { return data_; }

    bool get(std::size_t i, std::size_t j) const noexcept { return data_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool value = true) noexcept { data_[i].set(j, value); }

    /// Row-swap and row-add for in-place elimination; both keep row lengths intact.
    void swap_rows(std::size_t a, std::size_t b) noexcept { std::swap(data_[a], data_[b]); }
    void add_row(std::size_t target, std::size_t source) noexcept { data_[target] ^= data_[source]; }

    BinaryMatrix transpose() const;
    /// Column j of the result is column perm[j] of this matrix.
    BinaryMatrix permute_columns(std::span<const std::size_t> perm) const;
    /// Columns [first, first + count).
    BinaryMatrix column_block(std::size_t first, std::size_t count) const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVector> data_;
};

BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix hconcat(const BinaryMatrix& a, const BinaryMatrix& b);

/// u * G: XOR of the rows of G selected by the set bits of u.
BitVector encode(const BinaryMatrix& G, const BitVector& u);

struct SystematicForm {
    BinaryMatrix matrix;  ///< [I_rank | M] on the first rank rows; remaining rows are zero.
    std::vector<std::size_t> column_permutation;  ///< column j of matrix came from input column column_permutation[j].
    std::size_t rank = 0;
};

/// Gauss-Jordan elimination with pivot columns chosen left to right; dependent
/// columns are moved behind the identity block instead of failing.
SystematicForm systematize(const BinaryMatrix& m);

/// Reduced row echelon form (pivot columns left to right), zero rows dropped.
BinaryMatrix row_reduce(const BinaryMatrix& m);

std::size_t rank(const BinaryMatrix& m);

/// Inverse over GF(2), or nullopt when singular. Throws DimensionError if not square.
std::optional<BinaryMatrix> invert(const BinaryMatrix& m);

/// True when the first rows() columns form the identity.
bool is_systematic(const BinaryMatrix& g);

/// For G = [I | A] returns H = [A^T | I].
BinaryMatrix parity_check_from_systematic(const BinaryMatrix& g);

/// H * c^T == 0.
bool satisfies_parity(const BinaryMatrix& h, const BitVector& c);

/// Matrix text format: "n k" on the first line, then k rows of n '0'/'1' characters.
BinaryMatrix read_matrix(std::istream& in);
BinaryMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const BinaryMatrix& m);
std::string matrix_to_string(const BinaryMatrix& m);

}  // namespace circode
