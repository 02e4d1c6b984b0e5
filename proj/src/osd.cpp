#include "circode/osd.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>

namespace circode {

using Word = BitVector::Word;

SoftVector modulate(const BitVector& c) {
    SoftVector y(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) y[i] = c.get(i) ? -1.0 : 1.0;
    return y;
}

std::uint64_t osd_candidate_count(std::size_t k, std::size_t order) {
    std::uint64_t total = 0, term = 1;
    for (std::size_t j = 0; j <= std::min(order, k); ++j) {
        total += term;
        term = term * (k - j) / (j + 1);
    }
    return total;
}

OsdDecoder::OsdDecoder(BinaryMatrix generator) : g_(std::move(generator)) {
    if (g_.rows() == 0) throw DimensionError("osd: generator has no rows");
    if (rank(g_) < g_.rows()) throw DimensionError("osd: generator rank is below k (degenerate code)");
}

namespace {

// Sums of y over the set bits of a packed vector, eight bits per table lookup.
class ByteSumTable {
public:
    ByteSumTable(std::span<const double> y, std::span<const std::size_t> positions)
        : bytes_((positions.size() + 7) / 8), table_(bytes_ * 256, 0.0) {
        for (std::size_t c = 0; c < bytes_; ++c) {
            double* t = &table_[c * 256];
            for (unsigned b = 1; b < 256; ++b) {
                const unsigned low = static_cast<unsigned>(std::countr_zero(b));
                const std::size_t p = c * 8 + low;
                t[b] = t[b & (b - 1)] + (p < positions.size() ? y[positions[p]] : 0.0);
            }
        }
    }

    double sum(const Word* v) const noexcept {
        // Two accumulators halve the dependent-add chain.
        double even = 0.0, odd = 0.0;
        std::size_t c = 0;
        for (; c + 1 < bytes_; c += 2) {
            even += table_[c * 256 + ((v[c / 8] >> ((c % 8) * 8)) & 0xffU)];
            odd += table_[(c + 1) * 256 + ((v[(c + 1) / 8] >> (((c + 1) % 8) * 8)) & 0xffU)];
        }
        if (c < bytes_) even += table_[c * 256 + ((v[c / 8] >> ((c % 8) * 8)) & 0xffU)];
        return even + odd;
    }

private:
    std::size_t bytes_;
    std::vector<double> table_;
};

}  // namespace

OsdResult OsdDecoder::decode(std::span<const double> y, std::size_t order, OsdTrace* trace) const {
    const std::size_t n = g_.cols();
    const std::size_t k = g_.rows();
    if (y.size() != n) throw DimensionError("osd: soft vector length " + std::to_string(y.size()) + " != n " + std::to_string(n));
    if (order > k) throw DimensionError("osd: order exceeds k");

    // (1) reliability order
    std::vector<std::size_t> rel(n);
    std::iota(rel.begin(), rel.end(), 0);
    std::stable_sort(rel.begin(), rel.end(), [&](std::size_t a, std::size_t b) { return std::fabs(y[a]) > std::fabs(y[b]); });

    // (2) most reliable basis by greedy elimination along that order
    const std::size_t row_words = BitVector::word_count(n);
    std::vector<Word> rows(k * row_words);
    for (std::size_t i = 0; i < k; ++i)
        std::copy(g_.row(i).words().begin(), g_.row(i).words().end(), rows.begin() + static_cast<std::ptrdiff_t>(i * row_words));
    auto row_ptr = [&](std::size_t i) { return rows.data() + i * row_words; };
    std::vector<std::size_t> mrb;
    mrb.reserve(k);
    for (std::size_t col : rel) {
        if (mrb.size() == k) break;
        const std::size_t next = mrb.size();
        const std::size_t cw = col / 64;
        const Word bit = Word{1} << (col % 64);
        std::size_t p = next;
        while (p < k && !(row_ptr(p)[cw] & bit)) ++p;
        if (p == k) continue;
        if (p != next) std::swap_ranges(row_ptr(p), row_ptr(p) + row_words, row_ptr(next));
        const Word* pivot = row_ptr(next);
        for (std::size_t i = 0; i < k; ++i) {
            Word* r = row_ptr(i);
            if (i != next && (r[cw] & bit))
                for (std::size_t w = 0; w < row_words; ++w) r[w] ^= pivot[w];
        }
        mrb.push_back(col);
    }
    if (trace) {
        trace->reliability_order = rel;
        trace->mrb = mrb;
    }

    // Positions outside the basis, and each reduced row restricted to them.
    std::vector<bool> in_mrb(n, false);
    for (std::size_t c : mrb) in_mrb[c] = true;
    std::vector<std::size_t> rest;
    rest.reserve(n - k);
    for (std::size_t j = 0; j < n; ++j)
        if (!in_mrb[j]) rest.push_back(j);
    const std::size_t width = std::max<std::size_t>(1, BitVector::word_count(rest.size()));
    std::vector<Word> red(k * width, 0);
    for (std::size_t i = 0; i < k; ++i) {
        const Word* r = row_ptr(i);
        Word* out = &red[i * width];
        for (std::size_t t = 0; t < rest.size(); ++t)
            if ((r[rest[t] / 64] >> (rest[t] % 64)) & 1U) out[t / 64] |= Word{1} << (t % 64);
    }

    // (3) hard decisions on the basis
    std::vector<bool> u0(k);
    std::vector<double> flip_cost(k);
    double base = 0.0;
    std::vector<Word> start(width, 0);
    for (std::size_t i = 0; i < k; ++i) {
        const double v = y[mrb[i]];
        u0[i] = v < 0.0;
        flip_cost[i] = std::fabs(v);
        if (u0[i]) {
            base += v;
            for (std::size_t w = 0; w < width; ++w) start[w] ^= red[i * width + w];
        }
    }

    // (4) test patterns of weight 0..order. The metric is the sum of y over the codeword support,
    // which orders candidates exactly as the squared Euclidean distance does.
    const ByteSumTable table(y, rest);
    double best_metric = base + table.sum(start.data());
    std::vector<std::size_t> best_pattern;
    std::vector<std::size_t> idx(order);
    std::vector<Word> acc((order + 1) * width);
    std::vector<double> cost(order + 1, 0.0);
    std::copy(start.begin(), start.end(), acc.begin());
    for (std::size_t weight = 1; weight <= order; ++weight) {
        auto descend = [&](auto&& self, std::size_t depth, std::size_t lo) -> void {
            for (std::size_t i = lo; i + (weight - depth) <= k; ++i) {
                idx[depth] = i;
                Word* dst = &acc[(depth + 1) * width];
                const Word* src = &acc[depth * width];
                for (std::size_t w = 0; w < width; ++w) dst[w] = src[w] ^ red[i * width + w];
                cost[depth + 1] = cost[depth] + flip_cost[i];
                if (depth + 1 == weight) {
                    const double m = base + cost[depth + 1] + table.sum(dst);
                    if (m < best_metric) {
                        best_metric = m;
                        best_pattern.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(weight));
                    }
                } else {
                    self(self, depth + 1, i + 1);
                }
            }
        };
        descend(descend, 0, 0);
    }

    // (5) rebuild the winner in original coordinates
    OsdResult res;
    res.codeword = BitVector(n);
    std::vector<bool> u = u0;
    for (std::size_t i : best_pattern) u[i] = !u[i];
    auto out_words = res.codeword.words_mut();
    for (std::size_t i = 0; i < k; ++i)
        if (u[i])
            for (std::size_t w = 0; w < row_words; ++w) out_words[w] ^= row_ptr(i)[w];
    res.info_pattern_weight = best_pattern.size();
    res.candidates = osd_candidate_count(k, order);
    double score = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double s = res.codeword.get(j) ? -1.0 : 1.0;
        score += (y[j] - s) * (y[j] - s);
    }
    res.score = score;
    return res;
}

OsdResult osd_decode(const BinaryMatrix& G, std::span<const double> y, std::size_t order) {
    return OsdDecoder(G).decode(y, order);
}

}  // namespace circode
