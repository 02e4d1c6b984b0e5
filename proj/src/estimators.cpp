#include "circode/estimators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "circode/parallel.hpp"

namespace circode {

namespace {

std::size_t resolve_d1(std::size_t d1, std::size_t n, std::size_t k) { return d1 != 0 ? d1 : n - k + 1; }

void check_interval(std::size_t d0, std::size_t d1, std::size_t n, std::size_t k) {
    if (d0 < 1 || d0 > d1 || d1 > n - k + 1)
        throw std::invalid_argument("distance interval must satisfy 1 <= d0 <= d1 <= n - k + 1 (got [" +
                                    std::to_string(d0) + ", " + std::to_string(d1) + "])");
}

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

// Records the first strictly lighter nonzero codeword.
void offer(DistanceEstimate& est, const BitVector& c) {
    if (c.is_zero()) return;
    const std::size_t w = c.weight();
    if (!est.d || w < *est.d) {
        est.d = w;
        est.witness = c;
    }
}

SoftVector impulse_word(std::size_t n, double amplitude, std::size_t positions, Rng& rng) {
    SoftVector y(n, 1.0);
    const auto pos = sample_distinct(rng, n, positions);
    const auto shares = split_amplitude(amplitude, positions, rng);
    for (std::size_t t = 0; t < positions; ++t) y[pos[t]] -= shares[t];
    return y;
}

}  // namespace

std::vector<double> split_amplitude(double amplitude, std::size_t parts, Rng& rng) {
    if (parts == 0) return {};
    std::vector<double> cuts(parts - 1);
    for (auto& c : cuts) c = uniform01(rng) * amplitude;
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> shares(parts);
    double prev = 0.0;
    for (std::size_t i = 0; i + 1 < parts; ++i) {
        shares[i] = cuts[i] - prev;
        prev = cuts[i];
    }
    shares[parts - 1] = amplitude - prev;
    return shares;
}

void validate(const MimParams& p, std::size_t n, std::size_t k) {
    check_interval(p.d0, resolve_d1(p.d1, n, k), n, k);
    if (p.nb_test < 1) throw std::invalid_argument("nb_test must be at least 1");
    if (p.error_max > n) throw std::invalid_argument("error_max cannot exceed n");
    if (p.osd_order > k) throw std::invalid_argument("osd_order cannot exceed k");
}

DistanceEstimate mim_estimate(const BinaryMatrix& G, const MimParams& p) {
    const std::size_t n = G.cols(), k = G.rows();
    validate(p, n, k);
    const OsdDecoder decoder(G);
    const std::size_t d1 = resolve_d1(p.d1, n, k);
    const std::size_t widest = p.error_max != 0 ? p.error_max : std::min(d1, n);

    DistanceEstimate est;
    est.method = Method::mim;
    est.seed = p.seed;

    double a_min = static_cast<double>(d1) + 0.5;
    std::vector<OsdResult> outcomes(widest);
    for (std::size_t trial = 0; trial < p.nb_test; ++trial) {
        double amplitude = static_cast<double>(p.d0) - 0.5;
        bool departed = false;
        std::uint64_t step = 0;
        while (!departed && amplitude <= a_min - 1.0) {
            amplitude += 1.0;
            ++step;
            // nb_error runs from widest down to 1; slot j holds nb_error = widest - j.
            parallel_for(widest, p.threads, [&](std::size_t j) {
                const std::size_t nb_error = widest - j;
                Rng rng(derive_seed(p.seed, {trial, step, nb_error}));
                const SoftVector y = impulse_word(n, amplitude, nb_error, rng);
                outcomes[j] = decoder.decode(y, p.osd_order);
            });
            for (const OsdResult& o : outcomes) {
                est.work_units += o.candidates;
                if (!o.codeword.is_zero()) {
                    departed = true;
                    offer(est, o.codeword);
                }
            }
        }
        a_min = amplitude;
    }
    return est;
}

void validate(const MimGaParams& p, std::size_t n, std::size_t k) {
    check_interval(p.d0, resolve_d1(p.d1, n, k), n, k);
    if (p.population < 2) throw std::invalid_argument("population must be at least 2");
    if (p.generations < 1) throw std::invalid_argument("generations must be at least 1");
    check_probability(p.p_crossover, "p_crossover");
    check_probability(p.p_mutation, "p_mutation");
    if (!(p.mutation_amplitude > 0.0)) throw std::invalid_argument("mutation amplitude must be positive");
    if (p.nb_error < 1 || p.nb_error > n) throw std::invalid_argument("nb_error must lie in [1, n]");
    if (p.osd_order > k) throw std::invalid_argument("osd_order cannot exceed k");
}

DistanceEstimate mim_ga_estimate(const BinaryMatrix& G, const MimGaParams& p) {
    const std::size_t n = G.cols(), k = G.rows();
    validate(p, n, k);
    const OsdDecoder decoder(G);
    const double d0 = static_cast<double>(p.d0);
    const double d1 = static_cast<double>(resolve_d1(p.d1, n, k));

    struct Individual {
        SoftVector genes;
        std::size_t fitness = 0;  // 0 = not yet evaluated
        BitVector decoded;
    };

    DistanceEstimate est;
    est.method = Method::mim_ga;
    est.seed = p.seed;

    std::vector<Individual> pop(p.population);
    for (std::size_t i = 0; i < pop.size(); ++i) {
        Rng rng(derive_seed(p.seed, {0, i}));
        const double amplitude = d0 + uniform01(rng) * (d1 - d0);
        pop[i].genes = impulse_word(n, amplitude, p.nb_error, rng);
    }

    Rng rng(derive_seed(p.seed, {1}));
    std::vector<std::uint64_t> spent(pop.size());
    for (std::size_t gen = 0; gen < p.generations; ++gen) {
        std::fill(spent.begin(), spent.end(), 0);
        parallel_for(pop.size(), p.threads, [&](std::size_t i) {
            Individual& ind = pop[i];
            if (ind.fitness != 0) return;
            OsdResult r = decoder.decode(ind.genes, p.osd_order);
            spent[i] = r.candidates;
            const std::size_t w = r.codeword.weight();
            ind.fitness = w == 0 ? n : w;
            ind.decoded = std::move(r.codeword);
        });
        for (std::size_t i = 0; i < pop.size(); ++i) {
            est.work_units += spent[i];
            offer(est, pop[i].decoded);
        }
        std::stable_sort(pop.begin(), pop.end(),
                         [](const Individual& a, const Individual& b) { return a.fitness < b.fitness; });
        if (gen + 1 == p.generations) break;

        std::vector<Individual> next;
        next.reserve(pop.size());
        next.push_back(pop.front());
        while (next.size() < pop.size()) {
            const Individual& p1 = pop[uniform_index(rng, pop.size())];
            const Individual& p2 = pop[uniform_index(rng, pop.size())];
            if (uniform01(rng) < p.p_crossover) {
                Individual child;
                child.genes = crossover(p1.genes, p2.genes, CrossoverKind::one_point, rng).first;
                if (p.mutation_per_gene) {
                    for (double& g : child.genes)
                        if (uniform01(rng) < p.p_mutation)
                            g += (uniform01(rng) < 0.5 ? p.mutation_amplitude : -p.mutation_amplitude);
                } else if (uniform01(rng) < p.p_mutation) {
                    double& g = child.genes[uniform_index(rng, n)];
                    g += (uniform01(rng) < 0.5 ? p.mutation_amplitude : -p.mutation_amplitude);
                }
                next.push_back(std::move(child));
            } else {
                next.push_back(uniform01(rng) < 0.5 ? p1 : p2);
            }
        }
        pop = std::move(next);
    }
    return est;
}

std::string_view crossover_tag(CrossoverKind k) noexcept {
    switch (k) {
        case CrossoverKind::one_point: return "one_point";
        case CrossoverKind::two_point: return "two_point";
        case CrossoverKind::uniform: return "uniform";
    }
    return "two_point";
}

CrossoverKind parse_crossover(std::string_view tag) {
    for (CrossoverKind k : {CrossoverKind::one_point, CrossoverKind::two_point, CrossoverKind::uniform})
        if (crossover_tag(k) == tag) return k;
    throw ParseError("unknown crossover '" + std::string(tag) + "' (expected one_point, two_point or uniform)");
}

void validate(const GaMsgParams& p) {
    if (p.population < 2) throw std::invalid_argument("population must be at least 2");
    if (p.elite >= p.population) throw std::invalid_argument("elite count must be below the population size");
    if (p.generations < 1) throw std::invalid_argument("generations must be at least 1");
    check_probability(p.p_crossover, "p_crossover");
    check_probability(p.p_mutation, "p_mutation");
}

DistanceEstimate ga_message_distance(const BinaryMatrix& G, const GaMsgParams& p) {
    validate(p);
    const std::size_t n = G.cols(), k = G.rows();
    if (k == 0) throw DimensionError("code has dimension 0");

    struct Individual {
        BitVector message;
        std::size_t fitness = 0;
        BitVector codeword;
    };

    DistanceEstimate est;
    est.method = Method::ga_message;
    est.seed = p.seed;

    Rng rng(derive_seed(p.seed, {2}));
    std::vector<Individual> pop(p.population);
    for (auto& ind : pop) {
        ind.message = BitVector(k);
        const std::size_t w = 1 + uniform_index(rng, k);
        for (std::size_t pos : sample_distinct(rng, k, w)) ind.message.set(pos);
    }

    auto tournament = [&]() -> const Individual& {
        const Individual& a = pop[uniform_index(rng, pop.size())];
        const Individual& b = pop[uniform_index(rng, pop.size())];
        return b.fitness < a.fitness ? b : a;
    };
    auto mutate = [&](BitVector& m) {
        for (std::size_t i = 0; i < k; ++i)
            if (uniform01(rng) < p.p_mutation) m.flip(i);
    };

    for (std::size_t gen = 0; gen < p.generations; ++gen) {
        std::vector<char> encoded(pop.size(), 0);
        parallel_for(pop.size(), p.threads, [&](std::size_t i) {
            Individual& ind = pop[i];
            if (ind.fitness != 0) return;
            ind.codeword = encode(G, ind.message);
            const std::size_t w = ind.codeword.weight();
            ind.fitness = w == 0 ? n : w;
            encoded[i] = 1;
        });
        for (std::size_t i = 0; i < pop.size(); ++i) {
            est.work_units += static_cast<std::uint64_t>(encoded[i]);
            offer(est, pop[i].codeword);
        }
        std::stable_sort(pop.begin(), pop.end(),
                         [](const Individual& a, const Individual& b) { return a.fitness < b.fitness; });
        if (gen + 1 == p.generations) break;

        std::vector<Individual> next(pop.begin(), pop.begin() + static_cast<std::ptrdiff_t>(p.elite));
        while (next.size() < pop.size()) {
            const Individual& p1 = tournament();
            const Individual& p2 = tournament();
            if (uniform01(rng) < p.p_crossover) {
                auto [c1, c2] = crossover(p1.message, p2.message, p.crossover, rng);
                mutate(c1);
                mutate(c2);
                next.push_back(Individual{std::move(c1), 0, {}});
                if (next.size() < pop.size()) next.push_back(Individual{std::move(c2), 0, {}});
            } else {
                next.push_back(uniform01(rng) < 0.5 ? p1 : p2);
            }
        }
        pop = std::move(next);
    }
    return est;
}

BitVector one_point_mask(std::size_t length, std::size_t cut) {
    if (cut > length) throw DimensionError("crossover cut beyond chromosome length");
    BitVector m(length);
    for (std::size_t i = cut; i < length; ++i) m.set(i);
    return m;
}

BitVector two_point_mask(std::size_t length, std::size_t first, std::size_t last) {
    if (first > last || last > length) throw DimensionError("two-point cuts must satisfy first <= last <= length");
    BitVector m(length);
    for (std::size_t i = first; i < last; ++i) m.set(i);
    return m;
}

BitVector crossover_mask(CrossoverKind kind, std::size_t length, Rng& rng) {
    switch (kind) {
        case CrossoverKind::one_point:
            return one_point_mask(length, length < 2 ? uniform_index(rng, length + 1) : 1 + uniform_index(rng, length - 1));
        case CrossoverKind::two_point: {
            std::size_t a = uniform_index(rng, length + 1);
            std::size_t b = uniform_index(rng, length + 1);
            if (a > b) std::swap(a, b);
            return two_point_mask(length, a, b);
        }
        case CrossoverKind::uniform: {
            BitVector m(length);
            for (std::size_t i = 0; i < length; ++i)
                if (uniform01(rng) < 0.5) m.set(i);
            return m;
        }
    }
    throw DimensionError("unknown crossover kind");
}

std::pair<BitVector, BitVector> apply_mask(const BitVector& p1, const BitVector& p2, const BitVector& mask) {
    if (p1.size() != p2.size() || p1.size() != mask.size()) throw DimensionError("crossover: parents differ in length");
    const BitVector diff = (p1 ^ p2) & mask;
    return {p1 ^ diff, p2 ^ diff};
}

std::pair<SoftVector, SoftVector> apply_mask(const SoftVector& p1, const SoftVector& p2, const BitVector& mask) {
    if (p1.size() != p2.size() || p1.size() != mask.size()) throw DimensionError("crossover: parents differ in length");
    SoftVector c1 = p1, c2 = p2;
    for (std::size_t i = 0; i < p1.size(); ++i)
        if (mask.get(i)) std::swap(c1[i], c2[i]);
    return {std::move(c1), std::move(c2)};
}

std::pair<BitVector, BitVector> crossover(const BitVector& p1, const BitVector& p2, CrossoverKind kind, Rng& rng) {
    return apply_mask(p1, p2, crossover_mask(kind, p1.size(), rng));
}

std::pair<SoftVector, SoftVector> crossover(const SoftVector& p1, const SoftVector& p2, CrossoverKind kind, Rng& rng) {
    return apply_mask(p1, p2, crossover_mask(kind, p1.size(), rng));
}

}  // namespace circode
