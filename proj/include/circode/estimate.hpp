#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "circode/gf2.hpp"

namespace circode {

enum class Method { brute_force, chen, circulant_exact, ga_message, mim, mim_ga };

std::string_view method_tag(Method m) noexcept;
/// Accepts the CLI spellings: brute, chen, circulant-exact, ga-msg, mim, mim-ga.
Method parse_method(std::string_view tag);

/// Result of any minimum-distance method.
///
/// `d` is empty when a stochastic run produced no nonzero codeword at all
/// (inconclusive). Otherwise `witness` is a codeword of weight `d`, so `d` is
/// always an upper bound; `exact` says the method also proved minimality.
struct DistanceEstimate {
    std::optional<std::size_t> d;
    std::optional<BitVector> witness;
    Method method = Method::brute_force;
    bool exact = false;
    std::uint64_t work_units = 0;
    std::optional<std::uint64_t> seed;

    bool conclusive() const noexcept { return d.has_value(); }
};

}  // namespace circode
