#pragma once

// Exact minimum distance and certified upper bounds: Gray-code brute force,
// r-row slice enumeration over a systematic generator, and the circulant
// multi-systematic search.

#include <cstdint>
#include <limits>
#include <vector>

#include "circode/circulant.hpp"
#include "circode/estimate.hpp"
#include "circode/gf2.hpp"

namespace circode {

inline constexpr std::size_t kDefaultBruteForceCap = 28;
inline constexpr std::uint64_t kUnlimitedWork = std::numeric_limits<std::uint64_t>::max();

/// Thrown when the requested method cannot run on the input (too large, wrong family).
class UnsupportedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct BruteForceOptions {
    std::size_t k_cap = kDefaultBruteForceCap;
    std::size_t threads = 1;
};

/// Minimum nonzero weight over all 2^k - 1 messages (Gray-code order, one row XOR per step).
DistanceEstimate brute_force_distance(const BinaryMatrix& G, const BruteForceOptions& opts = {});

struct SliceResult {
    std::size_t r = 0;
    std::size_t min_weight = 0;  ///< r + mu
    BitVector witness;           ///< codeword in the generator's coordinates
    std::uint64_t work_units = 0;
};

struct SliceOptions {
    std::size_t threads = 1;
    /// Only combinations containing row 0. Valid when the code is invariant under simultaneous
    /// rotation of its information rows (circulant systematic forms).
    bool anchor_first_row = false;
};

/// Minimum weight of XORs of exactly r rows of a systematic generator.
SliceResult chen_slice(const BinaryMatrix& G_sys, std::size_t r, const SliceOptions& opts = {});

/// Number of combinations chen_slice examines.
std::uint64_t slice_size(std::size_t k, std::size_t r, bool anchored);

struct ChenOptions {
    std::size_t r_cap = std::numeric_limits<std::size_t>::max();
    /// Caller asserts the code is cyclic, enabling the floor(k d / n) stopping rule.
    bool cyclic = false;
    bool anchor_first_row = false;
    std::uint64_t max_work = kUnlimitedWork;
    std::size_t threads = 1;
};

/// Slice sweep r = 1, 2, ... keeping the best codeword. Exact after a full sweep, or after the
/// cyclic stopping rule when `cyclic` is set; otherwise the result is a witnessed upper bound.
DistanceEstimate chen_distance(const BinaryMatrix& G_sys, const ChenOptions& opts = {});

/// A systematic generator [I | M] of the same code, with column_map[j] = original position of
/// column j.
struct SystematicView {
    BinaryMatrix generator;
    std::vector<std::size_t> column_map;
    std::size_t info_block = 0;  ///< which circulant block carries the identity
};

/// Systematic forms of a DCC/TCC whose identity sits on each block with an invertible circulant.
/// The first entry is always the standard [I | A (| B)] form.
std::vector<SystematicView> circulant_systematic_views(const CodeSpec& spec);

struct CirculantExactOptions {
    std::size_t r_cap = std::numeric_limits<std::size_t>::max();  ///< largest slice weight probed
    std::uint64_t max_work = kUnlimitedWork;
    std::size_t brute_force_cap = kDefaultBruteForceCap;
    std::size_t threads = 1;
    /// Order in which the systematic forms are swept (indices into circulant_systematic_views);
    /// empty means natural order. The distance never depends on it.
    std::vector<std::size_t> form_order;
};

/// Exact for DCC/TCC once every available form has been swept to floor(d*/forms); falls back to
/// brute force when only one form exists and k is small enough. Bordered DCC goes to brute force
/// or a single-sided sweep.
DistanceEstimate circulant_exact_distance(const CodeSpec& spec, const CirculantExactOptions& opts = {});

/// True when c is a codeword of the systematic generator G.
bool is_codeword(const BinaryMatrix& G_sys, const BitVector& c);

}  // namespace circode
