#pragma once

// Adjudicates a published (code, distance) claim with the exact and stochastic methods.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circode/circulant.hpp"
#include "circode/estimate.hpp"
#include "circode/estimators.hpp"
#include "circode/exact_distance.hpp"

namespace circode {

enum class Verdict { confirmed_exact, upper_bound_witnessed, refuted, inconclusive };

std::string_view verdict_tag(Verdict v) noexcept;

enum class BudgetMode {
    exact,   ///< try to prove minimality first, then fall back to witnesses
    witness  ///< only look for low-weight codewords
};

struct VerifyBudget {
    BudgetMode mode = BudgetMode::exact;
    std::uint64_t max_work = 2'000'000'000;  ///< combinations for the exact search
    std::size_t brute_force_cap = kDefaultBruteForceCap;
    /// Slice weight reached by the single-form sweep in witness mode.
    std::size_t witness_r_cap = 4;
    std::size_t mim_runs = 3;  ///< MIM seeds tried (mim.seed, mim.seed+1, ...)
    MimParams mim;
    std::size_t threads = 1;
};

struct VerifyResult {
    Verdict verdict = Verdict::inconclusive;
    std::size_t claimed_d = 0;
    std::optional<std::size_t> d_found;  ///< lightest witnessed weight (or the exact distance)
    std::optional<BitVector> witness;
    bool exact = false;                  ///< d_found is the proven minimum distance
    std::string note;
    std::vector<DistanceEstimate> evidence;
};

/// refuted: a codeword lighter than the claim exists, or the exact distance differs from it
/// (note says which). upper_bound_witnessed: a codeword of the claimed weight was found and
/// nothing lighter. inconclusive: only heavier codewords found within budget.
VerifyResult verify_claim(const CodeSpec& spec, std::size_t claimed_d, const VerifyBudget& budget = {});

}  // namespace circode
