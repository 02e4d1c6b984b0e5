#include "circode/header_search.hpp"

#include <algorithm>
#include <charconv>
#include <ctime>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "circode/exact_distance.hpp"
#include "circode/parallel.hpp"

namespace circode {

void BoundsTable::insert(std::size_t n, std::size_t k, Bounds b) {
    if (k == 0 || k > n) throw std::invalid_argument("bounds: need 1 <= k <= n");
    if (b.lb < 1 || b.lb > b.ub || b.ub > n - k + 1)
        throw std::invalid_argument("bounds: need 1 <= lb <= ub <= n-k+1 for (" + std::to_string(n) + "," +
                                    std::to_string(k) + ")");
    entries_[{n, k}] = b;
}

std::optional<Bounds> BoundsTable::find(std::size_t n, std::size_t k) const {
    const auto it = entries_.find({n, k});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

BoundsTable parse_bounds(std::istream& in) {
    BoundsTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::size_t v[4];
        std::istringstream fields(line);
        std::string cell;
        std::size_t count = 0;
        while (std::getline(fields, cell, ',')) {
            const auto b = cell.find_first_not_of(" \t\r");
            const auto e = cell.find_last_not_of(" \t\r");
            const std::string_view tok = b == std::string::npos ? std::string_view{} : std::string_view(cell).substr(b, e - b + 1);
            if (count == 4) throw ParseError("line " + std::to_string(line_no) + ": expected 4 fields n,k,lb,ub");
            const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v[count]);
            if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
                throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(tok) + "' is not a non-negative integer");
            ++count;
        }
        if (count != 4) throw ParseError("line " + std::to_string(line_no) + ": expected 4 fields n,k,lb,ub");
        try {
            table.insert(v[0], v[1], {v[2], v[3]});
        } catch (const std::invalid_argument& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return table;
}

BoundsTable load_bounds(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open bounds file " + path);
    try {
        return parse_bounds(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string_view search_algo_tag(SearchAlgo a) noexcept { return a == SearchAlgo::ga ? "ga" : "random"; }

SearchAlgo parse_search_algo(std::string_view tag) {
    if (tag == "ga") return SearchAlgo::ga;
    if (tag == "random") return SearchAlgo::random;
    throw std::invalid_argument("unknown search algorithm '" + std::string(tag) + "' (ga, random)");
}

std::string_view verification_tag(Verification v) noexcept {
    switch (v) {
        case Verification::none: return "none";
        case Verification::witness: return "witness";
        case Verification::exact: return "exact";
    }
    return "?";
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

BitVector random_weight_header(std::size_t length, Rng& rng) {
    BitVector h(length);
    const std::size_t w = 1 + uniform_index(rng, length);
    for (std::size_t pos : sample_distinct(rng, length, w)) h.set(pos, true);
    return h;
}

namespace {

std::size_t header_length(Family f, std::size_t r) { return f == Family::tcc ? 2 * r : r; }

std::uint64_t header_seed(std::uint64_t master, std::uint64_t salt, const BitVector& h) {
    std::uint64_t s = derive_seed(master, {salt, h.size()});
    for (auto w : h.words()) s = derive_seed(s, {w});
    return s;
}

enum : std::uint64_t { kFitnessSalt = 1, kConfirmSalt = 2, kGaStream = 3, kRandomStream = 4 };

class Search {
public:
    Search(const HeaderSearchParams& p, const BoundsTable& bounds, const EmitCallback& emit)
        : p_(p), emit_(emit), base_(make_base(p)) {
        validate(p);
        const std::size_t n = base_.n(), k = base_.k();
        const auto entry = bounds.find(n, k);
        if (!entry && !p.lb_override)
            throw std::invalid_argument("no bounds entry for (" + std::to_string(n) + "," + std::to_string(k) +
                                        "); pass an explicit lower bound");
        ub_ = entry ? entry->ub : n - k + 1;
        lb_ = p.lb_override ? *p.lb_override : entry->lb;
        if (lb_ < 1 || lb_ > n - k + 1) throw std::invalid_argument("lower bound out of range [1, n-k+1]");
        fitness_ = p.fitness_mim;
        if (fitness_.d1 == 0) fitness_.d1 = ub_;
        fitness_.threads = 1;
        validate(fitness_, n, k);
        if (k > p.exact_confirm_cap) {
            MimParams c = p.confirm_mim;
            if (c.d1 == 0) c.d1 = ub_;
            validate(c, n, k);
        }
    }

    std::size_t length() const { return header_length(p_.family, p_.r); }

    /// Scores every header not yet cached, in parallel; results depend only on the header.
    void evaluate(const std::vector<BitVector>& headers) {
        out_.evaluations += headers.size();
        std::vector<BitVector> todo;
        std::set<BitVector> queued;
        for (const auto& h : headers)
            if (!cache_.contains(h) && queued.insert(h).second) todo.push_back(h);
        std::vector<DistanceEstimate> slots(todo.size());
        parallel_for(todo.size(), p_.threads, [&](std::size_t i) {
            MimParams mp = fitness_;
            mp.seed = header_seed(p_.seed, kFitnessSalt, todo[i]);
            slots[i] = mim_estimate(build_generator(base_.with_concatenated_headers(todo[i])), mp);
        });
        for (std::size_t i = 0; i < todo.size(); ++i) cache_.emplace(todo[i], std::move(slots[i]));
        out_.mim_runs += todo.size();
    }

    std::size_t fitness(const BitVector& h) const { return cache_.at(h).d.value_or(0); }

    void consider(const BitVector& h) {
        const DistanceEstimate& scored = cache_.at(h);
        if (!scored.d || *scored.d < lb_) return;
        const CodeSpec raw = base_.with_concatenated_headers(h);
        const std::size_t shift = canonical_shift(raw);
        const CodeSpec canon = canonical_rotation(raw);
        const BitVector key = canon.concatenated_headers();
        if (!emitted_.insert(key).second) return;
        ++out_.candidates;

        const BinaryMatrix G = build_generator(canon);
        DistanceEstimate est;
        Verification how;
        if (canon.k() <= p_.exact_confirm_cap) {
            est = brute_force_distance(G, {std::max(p_.exact_confirm_cap, canon.k()), p_.threads});
            how = Verification::exact;
        } else {
            MimParams mp = p_.confirm_mim;
            if (mp.d1 == 0) mp.d1 = ub_;
            mp.seed = header_seed(p_.seed, kConfirmSalt, key);
            mp.threads = p_.threads;
            est = mim_estimate(G, mp);
            // The search-time witness, carried over to the canonical code, may be the lighter one.
            const BitVector carried = shift == 0 ? *scored.witness : rotate_parity_blocks(*scored.witness, canon.r(), shift);
            if (!est.d || carried.weight() < *est.d) {
                est.d = carried.weight();
                est.witness = carried;
            }
            how = Verification::witness;
        }
        if (!est.witness || !is_codeword(G, *est.witness) || est.witness->weight() != *est.d)
            throw std::logic_error("header search: witness failed the parity check");
        if (*est.d < lb_) return;

        DiscoveredCode code{canon, std::move(est), *scored.d, lb_, ub_, how, utc_timestamp(), p_.seed};
        if (emit_) emit_(code);
        out_.codes.push_back(std::move(code));
    }

    SearchOutcome take() { return std::move(out_); }

private:
    static CodeSpec make_base(const HeaderSearchParams& p) {
        if (p.r == 0) throw std::invalid_argument("header search: r must be positive");
        if (p.family == Family::tcc) return CodeSpec::tcc(BitVector(p.r), BitVector(p.r));
        if (p.family == Family::bordered_dcc) return CodeSpec::bordered_dcc(BitVector(p.r));
        return CodeSpec::dcc(BitVector(p.r));
    }

    const HeaderSearchParams& p_;
    const EmitCallback& emit_;
    CodeSpec base_;
    std::size_t lb_ = 0, ub_ = 0;
    MimParams fitness_;
    std::map<BitVector, DistanceEstimate> cache_;
    std::set<BitVector> emitted_;
    SearchOutcome out_;
};

}  // namespace

void validate(const HeaderSearchParams& p) {
    if (p.r == 0) throw std::invalid_argument("header search: r must be positive");
    if (p.algo == SearchAlgo::ga) {
        const auto& g = p.ga;
        if (p.family == Family::bordered_dcc) throw std::invalid_argument("GA header search supports dcc and tcc only");
        if (g.population < 2) throw std::invalid_argument("GA population must be at least 2");
        if (g.elite >= g.population) throw std::invalid_argument("GA elite count must be below the population");
        if (g.generations == 0) throw std::invalid_argument("GA needs at least one generation");
        if (g.tournament_size == 0) throw std::invalid_argument("tournament size must be positive");
        if (!(g.p_crossover >= 0.0 && g.p_crossover <= 1.0)) throw std::invalid_argument("p_crossover must be in [0,1]");
        if (!(g.p_mutation >= 0.0 && g.p_mutation <= 1.0)) throw std::invalid_argument("p_mutation must be in [0,1]");
    }
    const std::size_t len = header_length(p.family, p.r);
    for (const auto& h : p.injected)
        if (h.size() != len)
            throw DimensionError("injected header has length " + std::to_string(h.size()) + ", expected " + std::to_string(len));
}

SearchOutcome ga_header_search(const HeaderSearchParams& p, const BoundsTable& bounds, const EmitCallback& emit) {
    Search s(p, bounds, emit);
    const auto& g = p.ga;
    const std::size_t len = s.length();
    Rng rng(derive_seed(p.seed, {kGaStream}));

    std::vector<BitVector> pop;
    pop.reserve(g.population);
    for (std::size_t i = 0; i < g.population; ++i) pop.push_back(random_weight_header(len, rng));

    s.evaluate(pop);  // later generations consist of already scored individuals
    for (std::size_t gen = 0;; ++gen) {
        for (const auto& h : pop) s.consider(h);
        std::stable_sort(pop.begin(), pop.end(),
                         [&](const BitVector& a, const BitVector& b) { return s.fitness(a) > s.fitness(b); });
        if (gen + 1 == g.generations) break;

        // Parents come from the better half; sorted, so the fitter of a tournament is its smallest index.
        const std::size_t pool = std::max<std::size_t>(2, pop.size() / 2);
        auto tournament = [&] {
            std::size_t best = uniform_index(rng, pool);
            for (std::size_t t = 1; t < g.tournament_size; ++t) best = std::min(best, uniform_index(rng, pool));
            return best;
        };
        auto mutate = [&](BitVector& c) {
            for (std::size_t j = 0; j < len; ++j)
                if (uniform01(rng) < g.p_mutation) c.flip(j);
        };
        std::vector<std::pair<BitVector, BitVector>> children;
        for (std::size_t i = g.elite; i < g.population; ++i) {
            const BitVector& p1 = pop[tournament()];
            const BitVector& p2 = pop[tournament()];
            auto kids = uniform01(rng) < g.p_crossover ? crossover(p1, p2, g.crossover, rng) : std::pair{p1, p2};
            mutate(kids.first);
            mutate(kids.second);
            children.push_back(std::move(kids));
        }
        std::vector<BitVector> flat;
        flat.reserve(2 * children.size());
        for (const auto& [a, b] : children) {
            flat.push_back(a);
            flat.push_back(b);
        }
        s.evaluate(flat);
        std::vector<BitVector> next(pop.begin(), pop.begin() + static_cast<std::ptrdiff_t>(g.elite));
        for (auto& [a, b] : children) next.push_back(s.fitness(a) >= s.fitness(b) ? std::move(a) : std::move(b));
        pop = std::move(next);
    }
    return s.take();
}

std::vector<BitVector> random_draws(const HeaderSearchParams& p) {
    const std::size_t len = header_length(p.family, p.r);
    Rng rng(derive_seed(p.seed, {kRandomStream}));
    std::bernoulli_distribution coin(0.5);
    std::vector<BitVector> draws;
    draws.reserve(p.max_draws);
    for (std::size_t i = 0; i < p.max_draws; ++i) {
        BitVector h(len);
        for (std::size_t j = 0; j < len; ++j) h.set(j, coin(rng));
        draws.push_back(i < p.injected.size() ? p.injected[i] : std::move(h));
    }
    return draws;
}

SearchOutcome random_header_search(const HeaderSearchParams& p, const BoundsTable& bounds, const EmitCallback& emit) {
    Search s(p, bounds, emit);
    const std::vector<BitVector> draws = random_draws(p);
    constexpr std::size_t kBatch = 256;
    for (std::size_t start = 0; start < draws.size(); start += kBatch) {
        const std::vector<BitVector> batch(draws.begin() + static_cast<std::ptrdiff_t>(start),
                                           draws.begin() + static_cast<std::ptrdiff_t>(std::min(draws.size(), start + kBatch)));
        s.evaluate(batch);
        for (const auto& h : batch) s.consider(h);
    }
    return s.take();
}

SearchOutcome header_search(const HeaderSearchParams& p, const BoundsTable& bounds, const EmitCallback& emit) {
    return p.algo == SearchAlgo::ga ? ga_header_search(p, bounds, emit) : random_header_search(p, bounds, emit);
}

}  // namespace circode
