#include "circode/gf2.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace circode {

namespace {

void require_same_length(const BitVector& a, const BitVector& b, const char* op) {
    if (a.size() != b.size())
        throw DimensionError(std::string(op) + ": length mismatch (" + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()) + ")");
}

}  // namespace

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const char c = bits[i];
        if (c == '1')
            v.set(i);
        else if (c != '0')
            throw ParseError("invalid bit character '" + std::string(1, c) + "' at position " + std::to_string(i));
    }
    return v;
}

BitVector BitVector::unit(std::size_t length, std::size_t i) {
    BitVector v(length);
    v.set(i);
    return v;
}

void BitVector::clear_tail() noexcept {
    const std::size_t rem = length_ % kWordBits;
    if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    require_same_length(*this, other, "xor");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    require_same_length(*this, other, "and");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
    require_same_length(*this, other, "or");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

BitVector BitVector::slice(std::size_t first, std::size_t count) const {
    if (first + count > length_) throw DimensionError("slice out of range");
    BitVector out(count);
    for (std::size_t i = 0; i < count; ++i)
        if (get(first + i)) out.set(i);
    return out;
}

void BitVector::assign_range(std::size_t first, const BitVector& src) {
    if (first + src.size() > length_) throw DimensionError("assign_range out of range");
    for (std::size_t i = 0; i < src.size(); ++i) set(first + i, src.get(i));
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        const BitVector::Word x = a.words_[w], y = b.words_[w];
        if (x == y) continue;
        // The lowest differing bit is the leftmost differing character.
        const BitVector::Word diff = x ^ y;
        const BitVector::Word low = diff & (~diff + 1);
        return (x & low) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

BitVector rotate_right(const BitVector& v, std::size_t s) {
    const std::size_t n = v.size();
    if (n == 0) return v;
    s %= n;
    if (s == 0) return v;
    BitVector out(n);
    for (std::size_t j = 0; j < n; ++j)
        if (v.get(j)) out.set((j + s) % n);
    return out;
}

BitVector concat(const BitVector& a, const BitVector& b) {
    BitVector out(a.size() + b.size());
    out.assign_range(0, a);
    out.assign_range(a.size(), b);
    return out;
}

std::ostream& operator<<(std::ostream& os, const BitVector& v) { return os << v.to_string(); }

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(std::vector<BitVector> rows) {
    BinaryMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != m.cols_) throw DimensionError("from_rows: ragged rows");
    m.data_ = std::move(rows);
    return m;
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows) {
    std::vector<BitVector> v;
    v.reserve(rows.size());
    for (const auto& s : rows) v.push_back(BitVector::from_string(s));
    return from_rows(std::move(v));
}

void BinaryMatrix::set_row(std::size_t i, BitVector v) {
    if (v.size() != cols_) throw DimensionError("set_row: row length must equal cols");
    data_[i] = std::move(v);
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) t.set(j, i);
    return t;
}

BinaryMatrix BinaryMatrix::permute_columns(std::span<const std::size_t> perm) const {
    if (perm.size() != cols_) throw DimensionError("permute_columns: permutation size mismatch");
    BinaryMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, perm[j])) out.set(i, j);
    return out;
}

BinaryMatrix BinaryMatrix::column_block(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw DimensionError("column_block out of range");
    BinaryMatrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i) out.data_[i] = data_[i].slice(first, count);
    return out;
}

BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
    BinaryMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) out.set_row(i, encode(b, a.row(i)));
    return out;
}

BinaryMatrix hconcat(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hconcat: row counts differ");
    std::vector<BitVector> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(concat(a.row(i), b.row(i)));
    BinaryMatrix m = BinaryMatrix::from_rows(std::move(rows));
    if (a.rows() == 0) return BinaryMatrix(0, a.cols() + b.cols());
    return m;
}

BitVector encode(const BinaryMatrix& G, const BitVector& u) {
    if (u.size() != G.rows())
        throw DimensionError("encode: message length " + std::to_string(u.size()) + " != generator rows " +
                             std::to_string(G.rows()));
    BitVector c(G.cols());
    for (std::size_t i = 0; i < G.rows(); ++i)
        if (u.get(i)) c ^= G.row(i);
    return c;
}

namespace {

// Eliminates in place; returns pivot columns in row order.
std::vector<std::size_t> gauss_jordan(BinaryMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < m.cols() && next < m.rows(); ++col) {
        std::size_t p = next;
        while (p < m.rows() && !m.get(p, col)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(next, p);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != next && m.get(i, col)) m.add_row(i, next);
        pivots.push_back(col);
        ++next;
    }
    return pivots;
}

}  // namespace

SystematicForm systematize(const BinaryMatrix& m) {
    BinaryMatrix work = m;
    const std::vector<std::size_t> pivots = gauss_jordan(work);

    std::vector<std::size_t> perm;
    perm.reserve(m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) {
        perm.push_back(c);
        is_pivot[c] = true;
    }
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) perm.push_back(c);

    return SystematicForm{work.permute_columns(perm), std::move(perm), pivots.size()};
}

BinaryMatrix row_reduce(const BinaryMatrix& m) {
    BinaryMatrix work = m;
    const std::size_t r = gauss_jordan(work).size();
    std::vector<BitVector> rows(work.row_span().begin(), work.row_span().begin() + static_cast<std::ptrdiff_t>(r));
    if (rows.empty()) return BinaryMatrix(0, m.cols());
    return BinaryMatrix::from_rows(std::move(rows));
}

std::size_t rank(const BinaryMatrix& m) {
    BinaryMatrix work = m;
    return gauss_jordan(work).size();
}

std::optional<BinaryMatrix> invert(const BinaryMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("invert: matrix is not square");
    const std::size_t n = m.rows();
    BinaryMatrix aug = hconcat(m, BinaryMatrix::identity(n));
    const auto pivots = gauss_jordan(aug);
    if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
    return aug.column_block(n, n);
}

bool is_systematic(const BinaryMatrix& g) {
    const std::size_t k = g.rows();
    if (k > g.cols()) return false;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (g.get(i, j) != (i == j)) return false;
    return true;
}

BinaryMatrix parity_check_from_systematic(const BinaryMatrix& g) {
    if (!is_systematic(g)) throw DimensionError("parity_check_from_systematic: generator is not of the form [I | A]");
    const std::size_t k = g.rows();
    const std::size_t r = g.cols() - k;
    BinaryMatrix h(r, g.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (g.get(i, k + j)) h.set(j, i);
    for (std::size_t j = 0; j < r; ++j) h.set(j, k + j);
    return h;
}

bool satisfies_parity(const BinaryMatrix& h, const BitVector& c) {
    if (c.size() != h.cols()) return false;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        const auto a = h.row(i).words();
        const auto b = c.words();
        int parity = 0;
        for (std::size_t w = 0; w < a.size(); ++w) parity ^= std::popcount(a[w] & b[w]) & 1;
        if (parity) return false;
    }
    return true;
}

BinaryMatrix read_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("matrix: missing header line");
    std::istringstream head(line);
    long long n = -1, k = -1;
    std::string extra;
    if (!(head >> n >> k) || (head >> extra) || n <= 0 || k < 0 || k > n)
        throw ParseError("matrix: line 1 must be \"n k\" with 0 <= k <= n, got \"" + line + "\"");
    std::vector<BitVector> rows;
    rows.reserve(static_cast<std::size_t>(k));
    for (long long i = 0; i < k; ++i) {
        if (!std::getline(in, line)) throw ParseError("matrix: expected " + std::to_string(k) + " rows, got " + std::to_string(i));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.size() != static_cast<std::size_t>(n))
            throw ParseError("matrix: line " + std::to_string(i + 2) + " has " + std::to_string(line.size()) +
                             " characters, expected " + std::to_string(n));
        try {
            rows.push_back(BitVector::from_string(line));
        } catch (const ParseError& e) {
            throw ParseError("matrix: line " + std::to_string(i + 2) + ": " + e.what());
        }
    }
    if (rows.empty()) return BinaryMatrix(0, static_cast<std::size_t>(n));
    return BinaryMatrix::from_rows(std::move(rows));
}

BinaryMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const BinaryMatrix& m) {
    out << m.cols() << ' ' << m.rows() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) out << m.row(i).to_string() << '\n';
}

std::string matrix_to_string(const BinaryMatrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

}  // namespace circode
