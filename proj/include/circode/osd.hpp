#pragma once

// Soft-input ordered statistics decoding.

#include <cstdint>
#include <span>
#include <vector>

#include "circode/gf2.hpp"

namespace circode {

/// Channel observations, BPSK convention: bit 0 -> +1, bit 1 -> -1.
using SoftVector = std::vector<double>;

SoftVector modulate(const BitVector& c);

struct OsdResult {
    BitVector codeword;
    double score = 0.0;  ///< squared Euclidean distance between modulate(codeword) and the input
    std::size_t info_pattern_weight = 0;
    std::uint64_t candidates = 0;
};

/// Reliability permutation and most reliable basis of one decode.
struct OsdTrace {
    std::vector<std::size_t> reliability_order;  ///< positions sorted by |y| descending, ties by index
    std::vector<std::size_t> mrb;                ///< the k independent positions, in pivot order
};

/// sum_{j=0..order} C(k, j)
std::uint64_t osd_candidate_count(std::size_t k, std::size_t order);

/// Order-L OSD over a fixed generator. Each decode re-sorts and re-systematizes; nothing is
/// cached between calls, so one decoder can be shared across threads.
class OsdDecoder {
public:
    /// Throws DimensionError when the generator rows are dependent.
    explicit OsdDecoder(BinaryMatrix generator);

    const BinaryMatrix& generator() const noexcept { return g_; }

    OsdResult decode(std::span<const double> y, std::size_t order, OsdTrace* trace = nullptr) const;

private:
    BinaryMatrix g_;
};

OsdResult osd_decode(const BinaryMatrix& G, std::span<const double> y, std::size_t order);

}  // namespace circode
