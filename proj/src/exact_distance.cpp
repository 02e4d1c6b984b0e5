#include "circode/exact_distance.hpp"

#include <algorithm>
#include <bit>

#include "circode/parallel.hpp"

namespace circode {

std::string_view method_tag(Method m) noexcept {
    switch (m) {
        case Method::brute_force: return "brute";
        case Method::chen: return "chen";
        case Method::circulant_exact: return "circulant-exact";
        case Method::ga_message: return "ga-msg";
        case Method::mim: return "mim";
        case Method::mim_ga: return "mim-ga";
    }
    return "brute";
}

Method parse_method(std::string_view tag) {
    for (Method m : {Method::brute_force, Method::chen, Method::circulant_exact, Method::ga_message, Method::mim,
                     Method::mim_ga})
        if (method_tag(m) == tag) return m;
    throw ParseError("unknown method '" + std::string(tag) +
                     "' (expected brute, chen, circulant-exact, ga-msg, mim or mim-ga)");
}

namespace {

using Word = BitVector::Word;

// Rows stored contiguously, `width` words each.
struct PackedRows {
    std::size_t width = 0;
    std::vector<Word> data;

    const Word* row(std::size_t i) const noexcept { return data.data() + i * width; }
};

PackedRows pack_columns(const BinaryMatrix& g, std::size_t first_col) {
    PackedRows p;
    const std::size_t bits = g.cols() - first_col;
    p.width = std::max<std::size_t>(1, BitVector::word_count(bits));
    p.data.assign(g.rows() * p.width, 0);
    for (std::size_t i = 0; i < g.rows(); ++i) {
        const BitVector part = g.row(i).slice(first_col, bits);
        std::copy(part.words().begin(), part.words().end(), p.data.begin() + static_cast<std::ptrdiff_t>(i * p.width));
    }
    return p;
}

inline std::size_t popcount_words(const Word* a, std::size_t w) noexcept {
    std::size_t s = 0;
    for (std::size_t i = 0; i < w; ++i) s += static_cast<std::size_t>(std::popcount(a[i]));
    return s;
}

inline void xor_into(Word* dst, const Word* a, const Word* b, std::size_t w) noexcept {
    for (std::size_t i = 0; i < w; ++i) dst[i] = a[i] ^ b[i];
}

struct ChunkBest {
    std::size_t weight = std::numeric_limits<std::size_t>::max();
    std::vector<Word> codeword;   // brute force: full codeword
    std::vector<std::size_t> rows; // slice: selected row indices
    std::uint64_t work = 0;
};

std::uint64_t saturating_binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > kUnlimitedWork) return kUnlimitedWork;
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace

DistanceEstimate brute_force_distance(const BinaryMatrix& G, const BruteForceOptions& opts) {
    const std::size_t k = G.rows();
    const std::size_t n = G.cols();
    if (k > opts.k_cap)
        throw UnsupportedInput("brute force limited to k <= " + std::to_string(opts.k_cap) + " (k = " +
                               std::to_string(k) + "); use chen, circulant-exact or a stochastic method");
    if (k == 0) throw UnsupportedInput("code has dimension 0");

    const PackedRows rows = pack_columns(G, 0);
    const std::size_t w = rows.width;
    const std::size_t prefix_bits = std::min<std::size_t>(k, 6);
    const std::size_t low_bits = k - prefix_bits;
    const std::size_t chunks = std::size_t{1} << prefix_bits;

    std::vector<ChunkBest> best(chunks);
    parallel_for(chunks, opts.threads, [&](std::size_t c) {
        std::vector<Word> cw(w, 0);
        for (std::size_t b = 0; b < prefix_bits; ++b)
            if ((c >> b) & 1U) xor_into(cw.data(), cw.data(), rows.row(low_bits + b), w);
        ChunkBest& out = best[c];
        auto consider = [&] {
            const std::size_t wt = popcount_words(cw.data(), w);
            if (wt < out.weight) {
                out.weight = wt;
                out.codeword = cw;
            }
        };
        if (c != 0) {
            consider();
            ++out.work;
        }
        const std::uint64_t steps = std::uint64_t{1} << low_bits;
        for (std::uint64_t i = 1; i < steps; ++i) {
            xor_into(cw.data(), cw.data(), rows.row(static_cast<std::size_t>(std::countr_zero(i))), w);
            const std::size_t wt = popcount_words(cw.data(), w);
            if (wt < out.weight) {
                out.weight = wt;
                out.codeword = cw;
            }
        }
        out.work += steps - 1;
    });

    DistanceEstimate est;
    est.method = Method::brute_force;
    est.exact = true;
    const ChunkBest* winner = nullptr;
    for (const auto& b : best) {
        est.work_units += b.work;
        if (!b.codeword.empty() && (!winner || b.weight < winner->weight)) winner = &b;
    }
    BitVector witness(n);
    std::copy(winner->codeword.begin(), winner->codeword.begin() + static_cast<std::ptrdiff_t>(witness.words().size()),
              witness.words_mut().begin());
    est.d = winner->weight;
    est.witness = std::move(witness);
    return est;
}

std::uint64_t slice_size(std::size_t k, std::size_t r, bool anchored) {
    if (r == 0 || r > k) return 0;
    return anchored ? saturating_binomial(k - 1, r - 1) : saturating_binomial(k, r);
}

SliceResult chen_slice(const BinaryMatrix& G_sys, std::size_t r, const SliceOptions& opts) {
    const std::size_t k = G_sys.rows();
    if (!is_systematic(G_sys)) throw DimensionError("chen_slice: generator must be systematic [I | M]");
    if (r < 1 || r > k) throw DimensionError("chen_slice: r must lie in [1, k]");

    const PackedRows red = pack_columns(G_sys, k);
    const std::size_t w = red.width;

    // Tasks fix the first min(r, 2) indices; each task enumerates the rest lexicographically with a
    // prefix-XOR stack, so the innermost level costs one row XOR per combination.
    std::vector<std::vector<std::size_t>> tasks;
    const std::size_t first_hi = opts.anchor_first_row ? 0 : k - r;
    for (std::size_t a = 0; a <= first_hi; ++a) {
        if (r == 1) {
            tasks.push_back({a});
            continue;
        }
        for (std::size_t b = a + 1; b <= k - r + 1; ++b) tasks.push_back({a, b});
    }

    std::vector<ChunkBest> best(tasks.size());
    parallel_for(tasks.size(), opts.threads, [&](std::size_t t) {
        const auto& prefix = tasks[t];
        ChunkBest& out = best[t];
        std::vector<Word> acc((r + 1) * w, 0);
        std::vector<std::size_t> idx(r, 0);
        for (std::size_t d = 0; d < prefix.size(); ++d) {
            idx[d] = prefix[d];
            xor_into(&acc[(d + 1) * w], &acc[d * w], red.row(prefix[d]), w);
        }
        auto record = [&](std::size_t wt) {
            out.weight = wt;
            out.rows = idx;
        };
        if (prefix.size() == r) {
            ++out.work;
            record(popcount_words(&acc[r * w], w));
            return;
        }
        // Depth-first lexicographic enumeration of idx[depth..r-1].
        std::vector<Word> scratch(w);
        auto descend = [&](auto&& self, std::size_t depth) -> void {
            const std::size_t lo = idx[depth - 1] + 1;
            const std::size_t hi = k - (r - depth);  // inclusive
            if (depth + 1 == r) {
                const Word* base = &acc[depth * w];
                for (std::size_t i = lo; i <= hi; ++i) {
                    xor_into(scratch.data(), base, red.row(i), w);
                    const std::size_t wt = popcount_words(scratch.data(), w);
                    if (wt < out.weight) {
                        idx[depth] = i;
                        record(wt);
                    }
                }
                out.work += hi - lo + 1;
                return;
            }
            for (std::size_t i = lo; i <= hi; ++i) {
                idx[depth] = i;
                xor_into(&acc[(depth + 1) * w], &acc[depth * w], red.row(i), w);
                self(self, depth + 1);
            }
        };
        descend(descend, prefix.size());
    });

    SliceResult res;
    res.r = r;
    const ChunkBest* winner = nullptr;
    for (const auto& b : best) {
        res.work_units += b.work;
        if (!b.rows.empty() && (!winner || b.weight < winner->weight)) winner = &b;
    }
    res.min_weight = r + winner->weight;
    BitVector u(k);
    for (std::size_t i : winner->rows) u.set(i);
    res.witness = encode(G_sys, u);
    return res;
}

DistanceEstimate chen_distance(const BinaryMatrix& G_sys, const ChenOptions& opts) {
    if (!is_systematic(G_sys)) throw DimensionError("chen_distance: generator must be systematic [I | M]");
    const std::size_t k = G_sys.rows();
    const std::size_t n = G_sys.cols();
    if (k == 0) throw UnsupportedInput("code has dimension 0");

    DistanceEstimate est;
    est.method = Method::chen;
    std::uint64_t budget = opts.max_work;
    const std::size_t last = std::min(opts.r_cap, k);
    for (std::size_t r = 1; r <= last; ++r) {
        if (opts.cyclic && est.d && (k * *est.d) / n < r) {
            est.exact = true;
            break;
        }
        const std::uint64_t cost = slice_size(k, r, opts.anchor_first_row);
        if (cost > budget) break;
        SliceResult s = chen_slice(G_sys, r, {opts.threads, opts.anchor_first_row});
        budget -= s.work_units;
        est.work_units += s.work_units;
        if (!est.d || s.min_weight < *est.d) {
            est.d = s.min_weight;
            est.witness = std::move(s.witness);
        }
        if (r == k) est.exact = true;
    }
    return est;
}

std::vector<SystematicView> circulant_systematic_views(const CodeSpec& spec) {
    if (spec.family() == Family::bordered_dcc)
        throw UnsupportedInput("circulant systematic views need a dcc or tcc spec");
    const std::size_t r = spec.r();
    const std::size_t blocks = spec.family() == Family::dcc ? 2 : 3;
    std::vector<BinaryMatrix> circ;
    circ.push_back(BinaryMatrix::identity(r));
    circ.push_back(build_circulant(spec.header_a()));
    if (blocks == 3) circ.push_back(build_circulant(*spec.header_b()));

    std::vector<SystematicView> views;
    for (std::size_t info = 0; info < blocks; ++info) {
        std::optional<BinaryMatrix> inv = info == 0 ? std::optional(circ[0]) : invert(circ[info]);
        if (!inv) continue;
        // Block order in the view: the information block first, then the others in original order.
        std::vector<std::size_t> order{info};
        for (std::size_t b = 0; b < blocks; ++b)
            if (b != info) order.push_back(b);
        BinaryMatrix g = *inv * circ[order[0]];
        std::vector<std::size_t> map;
        for (std::size_t j = 0; j < r; ++j) map.push_back(order[0] * r + j);
        for (std::size_t p = 1; p < blocks; ++p) {
            g = hconcat(g, *inv * circ[order[p]]);
            for (std::size_t j = 0; j < r; ++j) map.push_back(order[p] * r + j);
        }
        views.push_back(SystematicView{std::move(g), std::move(map), info});
    }
    return views;
}

namespace {

BitVector unmap(const BitVector& c, const std::vector<std::size_t>& map) {
    BitVector out(c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c.get(j)) out.set(map[j]);
    return out;
}

}  // namespace

DistanceEstimate circulant_exact_distance(const CodeSpec& spec, const CirculantExactOptions& opts) {
    const std::size_t k = spec.k();
    if (spec.family() == Family::bordered_dcc) {
        if (k <= opts.brute_force_cap) return brute_force_distance(build_generator(spec), {opts.brute_force_cap, opts.threads});
        ChenOptions co;
        co.r_cap = opts.r_cap;
        co.max_work = opts.max_work;
        co.threads = opts.threads;
        return chen_distance(build_generator(spec), co);
    }

    std::vector<SystematicView> views = circulant_systematic_views(spec);
    if (views.size() == 1 && k <= opts.brute_force_cap)
        return brute_force_distance(views.front().generator, {opts.brute_force_cap, opts.threads});

    std::vector<std::size_t> order = opts.form_order;
    if (order.empty())
        for (std::size_t i = 0; i < views.size(); ++i) order.push_back(i);

    DistanceEstimate est;
    est.method = Method::circulant_exact;
    const std::size_t forms = views.size();
    std::uint64_t budget = opts.max_work;
    const std::size_t last = std::min(opts.r_cap, k);
    bool stopped = false;
    for (std::size_t r = 1; r <= last && !stopped; ++r) {
        if (est.d && *est.d / forms < r) {
            est.exact = true;
            break;
        }
        const std::uint64_t cost = slice_size(k, r, true);
        for (std::size_t f : order) {
            if (f >= views.size()) throw DimensionError("form_order index out of range");
            if (cost > budget) {
                stopped = true;
                break;
            }
            SliceResult s = chen_slice(views[f].generator, r, {opts.threads, true});
            budget -= s.work_units;
            est.work_units += s.work_units;
            if (!est.d || s.min_weight < *est.d) {
                est.d = s.min_weight;
                est.witness = unmap(s.witness, views[f].column_map);
            }
        }
        if (!stopped && r == k) est.exact = true;
    }
    if (!stopped && !est.exact && est.d && (*est.d / forms <= last || last == k)) est.exact = true;
    return est;
}

bool is_codeword(const BinaryMatrix& G, const BitVector& c) {
    if (c.size() != G.cols()) return false;
    if (is_systematic(G)) return satisfies_parity(parity_check_from_systematic(G), c);
    std::vector<BitVector> rows(G.row_span().begin(), G.row_span().end());
    const std::size_t base = rank(G);
    rows.push_back(c);
    return rank(BinaryMatrix::from_rows(std::move(rows))) == base;
}

}  // namespace circode
