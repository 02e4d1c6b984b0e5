#pragma once

// Reference implementations for the tests. They use plain byte vectors and textbook
// definitions and share no code with the library beyond string conversion.

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "circode/gf2.hpp"

namespace oracle {

using Bits = std::vector<std::uint8_t>;
using Rows = std::vector<Bits>;

inline Bits bits(const std::string& s) {
    Bits b;
    for (char c : s) b.push_back(c == '1');
    return b;
}

inline Bits bits(const circode::BitVector& v) { return bits(v.to_string()); }

inline Rows rows(const circode::BinaryMatrix& m) {
    Rows r;
    for (std::size_t i = 0; i < m.rows(); ++i) r.push_back(bits(m.row(i)));
    return r;
}

inline std::string str(const Bits& b) {
    std::string s;
    for (auto x : b) s += x ? '1' : '0';
    return s;
}

inline std::size_t weight(const Bits& b) {
    std::size_t w = 0;
    for (auto x : b) w += x;
    return w;
}

/// Entry (i, j) = h[(j - i) mod r].
inline Rows circulant(const Bits& h) {
    const std::size_t r = h.size();
    Rows a(r, Bits(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) a[i][j] = h[(j + r - i) % r];
    return a;
}

/// [I | blocks...]
inline Rows systematic(const std::vector<Rows>& blocks) {
    const std::size_t k = blocks.front().size();
    Rows g(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) g[i].push_back(i == j);
        for (const auto& b : blocks) g[i].insert(g[i].end(), b[i].begin(), b[i].end());
    }
    return g;
}

/// Message m (bit i of the integer selects row i).
inline Bits encode(const Rows& g, std::uint64_t m) {
    Bits c(g.front().size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i)
        if ((m >> i) & 1U)
            for (std::size_t j = 0; j < c.size(); ++j) c[j] ^= g[i][j];
    return c;
}

/// Minimum nonzero codeword weight by enumerating every message.
inline std::size_t min_distance(const Rows& g) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.size()); ++m) {
        const Bits c = encode(g, m);
        const std::size_t w = weight(c);
        if (w > 0 && w < best) best = w;
    }
    return best;
}

/// Membership by enumeration (small k only).
inline bool is_codeword(const Rows& g, const Bits& c) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.size()); ++m)
        if (encode(g, m) == c) return true;
    return false;
}

/// Maximum-likelihood decoding over BPSK (0 -> +1): the codeword of least squared Euclidean
/// distance; ties go to the first message in counting order.
inline Bits ml_decode(const Rows& g, const std::vector<double>& y) {
    Bits best;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.size()); ++m) {
        const Bits c = encode(g, m);
        double d = 0;
        for (std::size_t j = 0; j < c.size(); ++j) {
            const double s = c[j] ? -1.0 : 1.0;
            d += (y[j] - s) * (y[j] - s);
        }
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

/// Minimum weight over XORs of exactly r rows (any generator), by recursive choice.
inline std::size_t slice_min(const Rows& g, std::size_t r) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.size()); ++m)
        if (static_cast<std::size_t>(__builtin_popcountll(m)) == r) best = std::min(best, weight(encode(g, m)));
    return best;
}

inline std::string random_bits(std::mt19937_64& rng, std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += (rng() & 1U) ? '1' : '0';
    return s;
}

}  // namespace oracle
