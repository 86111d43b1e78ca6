#include "kamknob/series_kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kamknob::kernels {

namespace {

std::atomic<Mode> g_mode{Mode::parallel};

// Pair products per merge chunk; fixed so chunk boundaries (and therefore
// the floating accumulation order) do not depend on the thread count.
constexpr std::size_t kPairsPerChunk = 1u << 18;
constexpr std::size_t kNormChunk = 8192;

struct Entry {
    MultiIndex index;
    Complex coeff;
};

inline bool within_caps(const MultiIndex& idx, const ProductLimits& lim) {
    return idx.p_degree() <= lim.max_p_degree && idx.fourier_order() <= lim.max_fourier_order;
}

}  // namespace

Mode mode() { return g_mode.load(std::memory_order_relaxed); }

void set_mode(Mode m) { g_mode.store(m, std::memory_order_relaxed); }

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

double term_weight(const MultiIndex& idx, const Complex& c, const DomainParams& dom) {
    return std::abs(c) * std::pow(dom.rho, idx.p_degree()) *
           std::exp(idx.fourier_order() * dom.sigma);
}

double weighted_norm_serial(std::span<const Term> terms, const DomainParams& dom) {
    double sum = 0.0;
    for (const Term& t : terms) sum += term_weight(t.index, t.coeff, dom);
    return sum;
}

double weighted_norm_parallel(std::span<const Term> terms, const DomainParams& dom) {
    const std::size_t n = terms.size();
    const std::size_t chunks = (n + kNormChunk - 1) / kNormChunk;
    if (chunks <= 1) return weighted_norm_serial(terms, dom);
    std::vector<double> partial(chunks, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kNormChunk;
        const std::size_t hi = std::min(lo + kNormChunk, n);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            s += term_weight(terms[i].index, terms[i].coeff, dom);
        }
        partial[static_cast<std::size_t>(c)] = s;
    }
    double sum = 0.0;
    for (double s : partial) sum += s;  // fixed chunk order
    return sum;
}

double weighted_norm_terms(std::span<const Term> terms, const DomainParams& dom) {
    return mode() == Mode::parallel ? weighted_norm_parallel(terms, dom)
                                    : weighted_norm_serial(terms, dom);
}

void prune_terms(std::vector<Term>& terms, const ProductLimits& lim, double* loss) {
    if (lim.prune_rel_tol <= 0.0 || terms.empty()) return;
    const double norm = weighted_norm_terms(terms, lim.loss_domain);
    const double floor = lim.prune_rel_tol * norm;
    if (floor <= 0.0) return;
    double dropped = 0.0;
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const double w = term_weight(terms[i].index, terms[i].coeff, lim.loss_domain);
        if (w < floor) {
            dropped += w;
        } else {
            terms[out++] = terms[i];
        }
    }
    terms.resize(out);
    if (loss) *loss += dropped;
}

std::vector<Term> product_terms_serial(std::span<const Term> f, std::span<const Term> g,
                                       const ProductLimits& lim, double* loss) {
    std::map<MultiIndex, Complex> acc;
    double dropped = 0.0;
    for (const Term& a : f) {
        for (const Term& b : g) {
            const MultiIndex idx = a.index.sum(b.index);
            const Complex c = a.coeff * b.coeff;
            if (!within_caps(idx, lim)) {
                dropped += term_weight(idx, c, lim.loss_domain);
                continue;
            }
            acc[idx] += c;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (const auto& [idx, c] : acc) {
        if (c != Complex(0.0, 0.0)) out.push_back(Term{idx, c});
    }
    if (loss) *loss += dropped;
    prune_terms(out, lim, loss);
    return out;
}

namespace {

// Merges the sorted product runs {f[i] * g[.] : i in [i_lo, i_hi)} of one
// chunk.  Each run is sorted because index addition preserves the term
// order of g.  Entries are materialized, sorted with a unique tie-break
// (run, position), and combined in one pass, so the accumulation order is
// a pure function of the inputs.
void merge_chunk(std::span<const Term> f, std::span<const Term> g, std::size_t i_lo,
                 std::size_t i_hi, const ProductLimits& lim, std::vector<Entry>& out,
                 double& dropped) {
    std::vector<Entry> pairs;
    pairs.reserve((i_hi - i_lo) * g.size());
    dropped = 0.0;
    for (std::size_t i = i_lo; i < i_hi; ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            const MultiIndex idx = f[i].index.sum(g[j].index);
            const Complex c = f[i].coeff * g[j].coeff;
            if (!within_caps(idx, lim)) {
                dropped += term_weight(idx, c, lim.loss_domain);
                continue;
            }
            pairs.push_back(Entry{idx, c});
        }
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Entry& a, const Entry& b) { return a.index < b.index; });
    out.clear();
    out.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size();) {
        MultiIndex idx = pairs[i].index;
        Complex c = pairs[i].coeff;
        std::size_t j = i + 1;
        while (j < pairs.size() && pairs[j].index == idx) {
            c += pairs[j].coeff;
            ++j;
        }
        out.push_back(Entry{idx, c});
        i = j;
    }
}

}  // namespace

std::vector<Term> product_terms_parallel(std::span<const Term> f, std::span<const Term> g,
                                         const ProductLimits& lim, double* loss) {
    if (f.empty() || g.empty()) return {};
    // Chunk boundaries depend only on the input sizes.
    const std::size_t runs_per_chunk =
        std::max<std::size_t>(1, kPairsPerChunk / std::max<std::size_t>(1, g.size()));
    const std::size_t chunks = (f.size() + runs_per_chunk - 1) / runs_per_chunk;

    std::vector<std::vector<Entry>> chunk_out(chunks);
    std::vector<double> chunk_drop(chunks, 0.0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
        const std::size_t i_lo = static_cast<std::size_t>(c) * runs_per_chunk;
        const std::size_t i_hi = std::min(i_lo + runs_per_chunk, f.size());
        merge_chunk(f, g, i_lo, i_hi, lim, chunk_out[static_cast<std::size_t>(c)],
                    chunk_drop[static_cast<std::size_t>(c)]);
    }

    double dropped = 0.0;
    for (double d : chunk_drop) dropped += d;  // fixed chunk order
    if (loss) *loss += dropped;

    // K-way merge of the chunk outputs; equal indices combine in chunk order.
    std::vector<Term> out;
    if (chunks == 1) {
        out.reserve(chunk_out[0].size());
        for (const Entry& e : chunk_out[0]) {
            if (e.coeff != Complex(0.0, 0.0)) out.push_back(Term{e.index, e.coeff});
        }
    } else {
        using Head = std::pair<MultiIndex, std::size_t>;  // (index, chunk)
        auto cmp = [](const Head& a, const Head& b) { return b < a; };
        std::priority_queue<Head, std::vector<Head>, decltype(cmp)> heap(cmp);
        std::vector<std::size_t> pos(chunks, 0);
        for (std::size_t c = 0; c < chunks; ++c) {
            if (!chunk_out[c].empty()) heap.emplace(chunk_out[c][0].index, c);
        }
        std::size_t total = 0;
        for (const auto& v : chunk_out) total += v.size();
        out.reserve(total);
        while (!heap.empty()) {
            const MultiIndex idx = heap.top().first;
            Complex c(0.0, 0.0);
            while (!heap.empty() && heap.top().first == idx) {
                const std::size_t ch = heap.top().second;
                heap.pop();
                c += chunk_out[ch][pos[ch]].coeff;
                if (++pos[ch] < chunk_out[ch].size()) {
                    heap.emplace(chunk_out[ch][pos[ch]].index, ch);
                }
            }
            if (c != Complex(0.0, 0.0)) out.push_back(Term{idx, c});
        }
    }

    prune_terms(out, lim, loss);
    return out;
}

std::vector<Term> product_terms(std::span<const Term> f, std::span<const Term> g,
                                const ProductLimits& lim, double* loss) {
    return mode() == Mode::parallel ? product_terms_parallel(f, g, lim, loss)
                                    : product_terms_serial(f, g, lim, loss);
}

}  // namespace kamknob::kernels
