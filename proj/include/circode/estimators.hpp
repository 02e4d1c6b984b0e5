#pragma once

// Stochastic minimum-distance estimators: the multiple impulse method (MIM), its
// genetic optimisation (MIM-GA), and a genetic search over messages.
//
// All three only ever report weights of codewords they actually produced, so every
// conclusive estimate is a witnessed upper bound on the minimum distance.

#include <cstdint>
#include <utility>

#include "circode/estimate.hpp"
#include "circode/gf2.hpp"
#include "circode/osd.hpp"
#include "circode/random.hpp"

namespace circode {

struct MimParams {
    std::size_t d0 = 1;         ///< lower end of the assumed distance interval
    std::size_t d1 = 0;         ///< upper end; 0 means n - k + 1
    std::size_t nb_test = 30;   ///< trials
    std::size_t error_max = 0;  ///< widest impulse; 0 means min(d1, n)
    std::size_t osd_order = 2;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
};

/// Throws std::invalid_argument when the parameters violate their ranges for this code.
void validate(const MimParams& p, std::size_t n, std::size_t k);

/// MIM: impulses of growing amplitude on the modulated all-zero word, OSD-decoded; the lightest
/// nonzero decoder output is the estimate.
DistanceEstimate mim_estimate(const BinaryMatrix& G, const MimParams& p);

struct MimGaParams {
    std::size_t population = 10;      ///< N_ind
    std::size_t generations = 10000;  ///< N_gm
    double p_crossover = 0.95;
    double p_mutation = 0.05;
    double mutation_amplitude = 0.1;  ///< r: a mutated gene moves by +-r
    bool mutation_per_gene = true;    ///< false: p_mutation applies once per child, to one gene
    std::size_t d0 = 1;
    std::size_t d1 = 0;               ///< 0 means n - k + 1
    std::size_t nb_error = 3;         ///< impulse positions per initial individual
    std::size_t osd_order = 2;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
};

void validate(const MimGaParams& p, std::size_t n, std::size_t k);

/// MIM-GA: a population of real-valued channel words evolved so that their OSD decodings get lighter.
DistanceEstimate mim_ga_estimate(const BinaryMatrix& G, const MimGaParams& p);

enum class CrossoverKind { one_point, two_point, uniform };

std::string_view crossover_tag(CrossoverKind k) noexcept;
CrossoverKind parse_crossover(std::string_view tag);

struct GaMsgParams {
    std::size_t population = 60;   ///< N_i
    std::size_t generations = 150; ///< N_gmax
    std::size_t elite = 2;         ///< N_e
    double p_crossover = 0.9;
    double p_mutation = 0.05;      ///< per bit
    CrossoverKind crossover = CrossoverKind::two_point;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
};

void validate(const GaMsgParams& p);

/// Genetic search over k-bit messages minimising the weight of their codewords.
DistanceEstimate ga_message_distance(const BinaryMatrix& G, const GaMsgParams& p);

/// Positions taken from the second parent by the first child (the second child is the mirror).
BitVector one_point_mask(std::size_t length, std::size_t cut);
BitVector two_point_mask(std::size_t length, std::size_t first, std::size_t last);
BitVector crossover_mask(CrossoverKind kind, std::size_t length, Rng& rng);

std::pair<BitVector, BitVector> apply_mask(const BitVector& p1, const BitVector& p2, const BitVector& mask);
std::pair<SoftVector, SoftVector> apply_mask(const SoftVector& p1, const SoftVector& p2, const BitVector& mask);

/// One-point swaps tails, two-point swaps the middle segment, uniform mixes each position at ratio 0.5.
std::pair<BitVector, BitVector> crossover(const BitVector& p1, const BitVector& p2, CrossoverKind kind, Rng& rng);
std::pair<SoftVector, SoftVector> crossover(const SoftVector& p1, const SoftVector& p2, CrossoverKind kind, Rng& rng);

/// Splits `amplitude` into `parts` positive shares using parts-1 uniform cut points.
std::vector<double> split_amplitude(double amplitude, std::size_t parts, Rng& rng);

}  // namespace circode
