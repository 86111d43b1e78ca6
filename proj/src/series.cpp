#include "kamknob/series.hpp"

#include <algorithm>
#include <cmath>

#include "kamknob/errors.hpp"

namespace kamknob {

namespace {

void canonicalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.index < b.index; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        MultiIndex idx = terms[i].index;
        Complex c = terms[i].coeff;
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j].index == idx) {
            c += terms[j].coeff;
            ++j;
        }
        if (c != Complex(0.0, 0.0)) {
            terms[out++] = Term{idx, c};
        }
        i = j;
    }
    terms.resize(out);
}

}  // namespace

FourierTaylor::FourierTaylor(int n) : n_(n) {
    if (n < 1 || n > MultiIndex::kMaxDim) {
        throw DimensionMismatch("FourierTaylor: dimension must be in [1, " +
                                std::to_string(MultiIndex::kMaxDim) + "]");
    }
}

FourierTaylor make_series_presorted(int n, std::vector<Term> terms) {
    FourierTaylor f(n);
    f.terms_ = std::move(terms);
    return f;
}

FourierTaylor FourierTaylor::from_terms(int n, std::vector<Term> terms) {
    FourierTaylor f(n);
    for (const Term& t : terms) {
        if (t.index.dim() != n) {
            throw DimensionMismatch("from_terms: term dimension mismatch");
        }
    }
    canonicalize(terms);
    f.terms_ = std::move(terms);
    return f;
}

FourierTaylor FourierTaylor::constant(int n, double value) {
    FourierTaylor f(n);
    if (value != 0.0) {
        std::vector<int> z(static_cast<std::size_t>(n), 0);
        f.terms_.push_back(Term{MultiIndex(z, z), Complex(value, 0.0)});
    }
    return f;
}

FourierTaylor FourierTaylor::monomial(int n, std::span<const int> m, std::span<const int> k,
                                      Complex coeff) {
    FourierTaylor f(n);
    if (static_cast<int>(m.size()) != n || static_cast<int>(k.size()) != n) {
        throw DimensionMismatch("monomial: index length mismatch");
    }
    if (coeff != Complex(0.0, 0.0)) {
        f.terms_.push_back(Term{MultiIndex(m, k), coeff});
    }
    return f;
}

FourierTaylor FourierTaylor::action(int n, int j, double coeff) {
    std::vector<int> m(static_cast<std::size_t>(n), 0);
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    m[static_cast<std::size_t>(j)] = 1;
    return monomial(n, m, k, Complex(coeff, 0.0));
}

FourierTaylor FourierTaylor::linear(std::span<const double> omega) {
    const int n = static_cast<int>(omega.size());
    FourierTaylor f(n);
    std::vector<Term> terms;
    for (int j = 0; j < n; ++j) {
        if (omega[static_cast<std::size_t>(j)] == 0.0) continue;
        std::vector<int> m(static_cast<std::size_t>(n), 0);
        std::vector<int> k(static_cast<std::size_t>(n), 0);
        m[static_cast<std::size_t>(j)] = 1;
        terms.push_back(Term{MultiIndex(m, k), Complex(omega[static_cast<std::size_t>(j)], 0.0)});
    }
    canonicalize(terms);
    f.terms_ = std::move(terms);
    return f;
}

FourierTaylor FourierTaylor::cosine_mode(int n, std::span<const int> m, std::span<const int> k,
                                         double amp) {
    // amp * p^m cos(k.q) = (amp/2) p^m (e^{ik.q} + e^{-ik.q})
    FourierTaylor f(n);
    if (amp == 0.0) return f;
    MultiIndex idx(m, k);
    if (idx.fourier_order() == 0) {
        return monomial(n, m, k, Complex(amp, 0.0));
    }
    std::vector<Term> terms{Term{idx, Complex(amp / 2.0, 0.0)},
                            Term{idx.conjugate(), Complex(amp / 2.0, 0.0)}};
    canonicalize(terms);
    f.terms_ = std::move(terms);
    return f;
}

FourierTaylor FourierTaylor::sine_mode(int n, std::span<const int> m, std::span<const int> k,
                                       double amp) {
    // amp * p^m sin(k.q) = (amp/(2i)) p^m (e^{ik.q} - e^{-ik.q})
    FourierTaylor f(n);
    if (amp == 0.0) return f;
    MultiIndex idx(m, k);
    if (idx.fourier_order() == 0) return f;  // sin(0) = 0
    std::vector<Term> terms{Term{idx, Complex(0.0, -amp / 2.0)},
                            Term{idx.conjugate(), Complex(0.0, amp / 2.0)}};
    canonicalize(terms);
    f.terms_ = std::move(terms);
    return f;
}

FourierTaylor FourierTaylor::cosine(int n, std::span<const int> k, double amp) {
    std::vector<int> m(static_cast<std::size_t>(n), 0);
    return cosine_mode(n, m, k, amp);
}

FourierTaylor FourierTaylor::sine(int n, std::span<const int> k, double amp) {
    std::vector<int> m(static_cast<std::size_t>(n), 0);
    return sine_mode(n, m, k, amp);
}

Complex FourierTaylor::coeff(const MultiIndex& idx) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                               [](const Term& t, const MultiIndex& i) { return t.index < i; });
    if (it != terms_.end() && it->index == idx) return it->coeff;
    return Complex(0.0, 0.0);
}

int FourierTaylor::max_p_degree() const {
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, t.index.p_degree());
    return d;
}

int FourierTaylor::max_fourier_order() const {
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, t.index.fourier_order());
    return d;
}

double FourierTaylor::max_abs_coeff() const {
    double m = 0.0;
    for (const Term& t : terms_) m = std::max(m, std::abs(t.coeff));
    return m;
}

FourierTaylor& FourierTaylor::operator+=(const FourierTaylor& rhs) {
    if (n_ != rhs.n_) throw DimensionMismatch("series +=: dimension mismatch");
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        if (terms_[i].index < rhs.terms_[j].index) {
            merged.push_back(terms_[i++]);
        } else if (rhs.terms_[j].index < terms_[i].index) {
            merged.push_back(rhs.terms_[j++]);
        } else {
            Complex c = terms_[i].coeff + rhs.terms_[j].coeff;
            if (c != Complex(0.0, 0.0)) merged.push_back(Term{terms_[i].index, c});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) merged.push_back(terms_[i]);
    for (; j < rhs.terms_.size(); ++j) merged.push_back(rhs.terms_[j]);
    terms_ = std::move(merged);
    return *this;
}

FourierTaylor& FourierTaylor::operator-=(const FourierTaylor& rhs) {
    return *this += -rhs;
}

FourierTaylor& FourierTaylor::operator*=(double factor) {
    if (factor == 0.0) {
        terms_.clear();
        return *this;
    }
    for (Term& t : terms_) t.coeff *= factor;
    return *this;
}

FourierTaylor FourierTaylor::operator-() const {
    FourierTaylor out = *this;
    for (Term& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

bool FourierTaylor::is_hermitian(double tol) const {
    const double scale = std::max(max_abs_coeff(), 1e-300);
    for (const Term& t : terms_) {
        const Complex partner = coeff(t.index.conjugate());
        if (std::abs(partner - std::conj(t.coeff)) > tol * scale) return false;
    }
    return true;
}

}  // namespace kamknob
