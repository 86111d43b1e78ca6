#pragma once

#include <span>
#include <vector>

#include "kamknob/series.hpp"

namespace kamknob::kernels {

// Execution mode of the hot kernels.  The serial variants are the
// straightforward reference implementations and stay in the build so the
// parallel ones can be validated against them (and benchmarked; see
// tools/bench_series.cpp).
enum class Mode { serial, parallel };

Mode mode();
void set_mode(Mode m);
int thread_count();

struct ProductLimits {
    int max_p_degree = 4;
    int max_fourier_order = 32;
    double prune_rel_tol = 0.0;
    DomainParams loss_domain{1.0, 1.0};

    static ProductLimits from_policy(const TruncationPolicy& pol) {
        return {pol.max_p_degree, pol.max_fourier_order, pol.prune_rel_tol, pol.loss_domain};
    }
};

// Weight of one term in the rho/sigma norm: |c| rho^|m| e^{|k| sigma}.
double term_weight(const MultiIndex& idx, const Complex& c, const DomainParams& dom);

// Term-map product sum_{i,j} f_i * g_j with index addition, cap filtering
// and optional relative pruning.  Inputs must be sorted term vectors;
// output is sorted, combined, zero-free.  `loss`, when non-null, is
// incremented by the weighted norm of every dropped term.
//
// The parallel variant chunks the f-terms, merges each chunk's sorted
// product runs independently, and combines the chunks in a fixed order,
// so its result does not depend on the number of threads.
std::vector<Term> product_terms_serial(std::span<const Term> f, std::span<const Term> g,
                                       const ProductLimits& lim, double* loss);
std::vector<Term> product_terms_parallel(std::span<const Term> f, std::span<const Term> g,
                                         const ProductLimits& lim, double* loss);
std::vector<Term> product_terms(std::span<const Term> f, std::span<const Term> g,
                                const ProductLimits& lim, double* loss);

// Weighted norm reduction sum_t |c_t| rho^|m_t| e^{|k_t| sigma}.  The
// parallel variant reduces fixed-size chunks and combines the partial sums
// in chunk order (thread-count independent).
double weighted_norm_serial(std::span<const Term> terms, const DomainParams& dom);
double weighted_norm_parallel(std::span<const Term> terms, const DomainParams& dom);
double weighted_norm_terms(std::span<const Term> terms, const DomainParams& dom);

// Drops terms whose weight at lim.loss_domain is below
// prune_rel_tol * (norm of the whole vector); adds dropped weight to loss.
void prune_terms(std::vector<Term>& terms, const ProductLimits& lim, double* loss);

}  // namespace kamknob::kernels
