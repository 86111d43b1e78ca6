#pragma once

#include <complex>
#include <span>
#include <vector>

#include "kamknob/multi_index.hpp"

namespace kamknob {

using Complex = std::complex<double>;

// Analyticity widths: actions within distance rho of the real domain,
// angles within imaginary part sigma.
struct DomainParams {
    double rho = 1.0;
    double sigma = 1.0;

    DomainParams scaled(double factor) const { return {rho * factor, sigma * factor}; }
    bool valid() const { return rho > 0.0 && sigma > 0.0; }
};

// Caps and tolerances applied by the algebraic operations.  Dropped terms
// are metered as "truncation loss": the sum of their weighted norms at
// loss_domain, so truncation error stays observable in run reports.
struct TruncationPolicy {
    int max_p_degree = 4;
    int max_fourier_order = 32;
    int max_lie_order = 12;
    // Lie series: stop once a term's weighted norm falls below this times ||f||.
    double tail_rel_tol = 1e-16;
    // Per-operation relative coefficient floor (0 disables pruning).
    double prune_rel_tol = 1e-18;
    DomainParams loss_domain{1.0, 1.0};

    TruncationPolicy with_domain(const DomainParams& dom) const {
        TruncationPolicy p = *this;
        p.loss_domain = dom;
        return p;
    }
    TruncationPolicy exact() const {
        TruncationPolicy p = *this;
        p.prune_rel_tol = 0.0;
        return p;
    }
};

struct Term {
    MultiIndex index;
    Complex coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

// Sparse Fourier-Taylor series sum_{m,k} c_{m,k} p^m exp(i k.q) over n
// action-angle pairs.  Terms are kept sorted by index, combined, and free
// of exact zeros, so two series represent the same coefficient map iff
// their term vectors are equal.  Series meant to represent real functions
// carry both (m,k) and (m,-k) with conjugate coefficients; is_hermitian()
// checks that.
class FourierTaylor {
public:
    FourierTaylor() = default;
    explicit FourierTaylor(int n);

    static FourierTaylor zero(int n) { return FourierTaylor(n); }
    static FourierTaylor constant(int n, double value);
    // Single term, exactly as given; Hermitian pairing is the caller's business.
    static FourierTaylor monomial(int n, std::span<const int> m, std::span<const int> k,
                                  Complex coeff);
    static FourierTaylor action(int n, int j, double coeff = 1.0);  // coeff * p_j
    static FourierTaylor linear(std::span<const double> omega);     // sum_j omega_j p_j
    static FourierTaylor cosine(int n, std::span<const int> k, double amp);
    static FourierTaylor sine(int n, std::span<const int> k, double amp);
    // amp * p^m * cos/sin(k.q)
    static FourierTaylor cosine_mode(int n, std::span<const int> m, std::span<const int> k,
                                     double amp);
    static FourierTaylor sine_mode(int n, std::span<const int> m, std::span<const int> k,
                                   double amp);
    // Canonicalizes: sorts, combines duplicates, drops exact zeros.
    static FourierTaylor from_terms(int n, std::vector<Term> terms);

    int dim() const { return n_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }
    Complex coeff(const MultiIndex& idx) const;  // 0 if absent

    int max_p_degree() const;
    int max_fourier_order() const;
    double max_abs_coeff() const;

    FourierTaylor& operator+=(const FourierTaylor& rhs);
    FourierTaylor& operator-=(const FourierTaylor& rhs);
    FourierTaylor& operator*=(double factor);

    friend FourierTaylor operator+(FourierTaylor lhs, const FourierTaylor& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend FourierTaylor operator-(FourierTaylor lhs, const FourierTaylor& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend FourierTaylor operator*(FourierTaylor lhs, double factor) {
        lhs *= factor;
        return lhs;
    }
    friend FourierTaylor operator*(double factor, FourierTaylor rhs) {
        rhs *= factor;
        return rhs;
    }
    FourierTaylor operator-() const;

    friend bool operator==(const FourierTaylor&, const FourierTaylor&) = default;

    // c_{m,-k} == conj(c_{m,k}) for every stored term, within tol (relative
    // to the largest coefficient).
    bool is_hermitian(double tol = 1e-12) const;

private:
    int n_ = 0;
    std::vector<Term> terms_;

    friend FourierTaylor make_series_presorted(int n, std::vector<Term> terms);
};

// Internal fast path: terms already sorted, combined and zero-free.
FourierTaylor make_series_presorted(int n, std::vector<Term> terms);

}  // namespace kamknob
