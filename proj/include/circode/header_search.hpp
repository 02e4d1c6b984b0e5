#pragma once

// Searching header space for good DCC/TCC: a GA over headers and plain random draws, both
// scored by MIM and gated by a best-known-bounds table.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circode/circulant.hpp"
#include "circode/estimate.hpp"
#include "circode/estimators.hpp"

namespace circode {

struct Bounds {
    std::size_t lb = 0;
    std::size_t ub = 0;
    friend bool operator==(const Bounds&, const Bounds&) = default;
};

class BoundsTable {
public:
    /// Throws std::invalid_argument unless 1 <= lb <= ub <= n - k + 1.
    void insert(std::size_t n, std::size_t k, Bounds b);
    std::optional<Bounds> find(std::size_t n, std::size_t k) const;
    std::size_t size() const noexcept { return entries_.size(); }

private:
    std::map<std::pair<std::size_t, std::size_t>, Bounds> entries_;
};

/// Lines "n,k,lb,ub"; blank lines and '#' comments skipped; a repeated (n,k) keeps the last.
/// Throws ParseError with the line number.
BoundsTable parse_bounds(std::istream& in);
BoundsTable load_bounds(const std::string& path);

enum class SearchAlgo { ga, random };

std::string_view search_algo_tag(SearchAlgo a) noexcept;
SearchAlgo parse_search_algo(std::string_view tag);

struct HeaderGaParams {
    std::size_t population = 1000;  ///< N_i
    std::size_t elite = 10;         ///< N_e
    std::size_t generations = 75;
    double p_crossover = 0.80;
    double p_mutation = 0.02;       ///< per bit
    CrossoverKind crossover = CrossoverKind::two_point;
    std::size_t tournament_size = 2;
};

enum class Verification { none, witness, exact };

std::string_view verification_tag(Verification v) noexcept;

struct HeaderSearchParams {
    Family family = Family::dcc;
    std::size_t r = 0;
    SearchAlgo algo = SearchAlgo::ga;
    HeaderGaParams ga;
    std::size_t max_draws = 1000;
    /// Cheap MIM used as fitness; its seed is derived from (seed, header).
    MimParams fitness_mim = [] { MimParams p; p.nb_test = 3; return p; }();
    /// Full MIM run before a code is emitted.
    MimParams confirm_mim;
    /// Emitted codes with k at or below this are confirmed by brute force instead.
    std::size_t exact_confirm_cap = 20;
    /// Overrides the bounds table (required when the table has no (n,k) entry).
    std::optional<std::size_t> lb_override;
    /// Random search: these headers replace the first draws, in order.
    std::vector<BitVector> injected;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
};

void validate(const HeaderSearchParams& p);

struct DiscoveredCode {
    CodeSpec spec;  ///< canonical rotation
    DistanceEstimate estimate;
    std::size_t fitness = 0;  ///< the search-time MIM value that triggered the emission
    std::size_t lb = 0, ub = 0;
    Verification verification = Verification::none;
    std::string timestamp;  ///< UTC, ISO 8601
    std::uint64_t master_seed = 0;
};

struct SearchOutcome {
    std::vector<DiscoveredCode> codes;
    std::size_t evaluations = 0;  ///< individuals or draws scored
    std::size_t mim_runs = 0;     ///< fitness MIM runs actually made (cache misses)
    std::size_t candidates = 0;   ///< distinct canonical headers whose fitness passed the gate
};

using EmitCallback = std::function<void(const DiscoveredCode&)>;

/// Emission order is (generation, individual) and does not depend on `threads`.
SearchOutcome ga_header_search(const HeaderSearchParams& p, const BoundsTable& bounds, const EmitCallback& emit = {});
SearchOutcome random_header_search(const HeaderSearchParams& p, const BoundsTable& bounds, const EmitCallback& emit = {});
SearchOutcome header_search(const HeaderSearchParams& p, const BoundsTable& bounds, const EmitCallback& emit = {});

/// The headers random_header_search evaluates, in order: uniform bits, with `injected`
/// replacing the first draws.
std::vector<BitVector> random_draws(const HeaderSearchParams& p);

/// Random header of uniformly drawn weight in [1, length] at uniform positions (GA initialisation).
BitVector random_weight_header(std::size_t length, Rng& rng);

std::string utc_timestamp();

}  // namespace circode
