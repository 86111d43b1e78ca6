#include "kamknob/series_ops.hpp"

#include <algorithm>
#include <cmath>

#include "kamknob/errors.hpp"
#include "kamknob/series_kernels.hpp"

namespace kamknob {

namespace {

void require_same_dim(const FourierTaylor& f, const FourierTaylor& g, const char* who) {
    if (f.dim() != g.dim()) {
        throw DimensionMismatch(std::string(who) + ": operand dimensions differ");
    }
}

}  // namespace

FourierTaylor multiply(const FourierTaylor& f, const FourierTaylor& g,
                       const TruncationPolicy& pol, OpStats* stats) {
    require_same_dim(f, g, "multiply");
    double loss = 0.0;
    auto terms = kernels::product_terms(f.terms(), g.terms(),
                                        kernels::ProductLimits::from_policy(pol), &loss);
    if (stats) stats->truncation_loss += loss;
    return make_series_presorted(f.dim(), std::move(terms));
}

FourierTaylor d_dp(const FourierTaylor& f, int j) {
    std::vector<Term> out;
    out.reserve(f.size());
    for (const Term& t : f.terms()) {
        const int mj = t.index.m(j);
        if (mj == 0) continue;
        out.push_back(Term{t.index.with_m(j, mj - 1), t.coeff * static_cast<double>(mj)});
    }
    return FourierTaylor::from_terms(f.dim(), std::move(out));
}

FourierTaylor d_dq(const FourierTaylor& f, int j) {
    std::vector<Term> out;
    out.reserve(f.size());
    for (const Term& t : f.terms()) {
        const int kj = t.index.k(j);
        if (kj == 0) continue;
        out.push_back(Term{t.index, t.coeff * Complex(0.0, static_cast<double>(kj))});
    }
    return make_series_presorted(f.dim(), std::move(out));
}

FourierTaylor poisson_bracket(const FourierTaylor& f, const FourierTaylor& g,
                              const TruncationPolicy& pol, OpStats* stats) {
    require_same_dim(f, g, "poisson_bracket");
    FourierTaylor out(f.dim());
    for (int j = 0; j < f.dim(); ++j) {
        const FourierTaylor fq = d_dq(f, j);
        const FourierTaylor gp = d_dp(g, j);
        if (!fq.empty() && !gp.empty()) out += multiply(fq, gp, pol, stats);
        const FourierTaylor fp = d_dp(f, j);
        const FourierTaylor gq = d_dq(g, j);
        if (!fp.empty() && !gq.empty()) out -= multiply(fp, gq, pol, stats);
    }
    return out;
}

LieSeriesResult lie_series_apply(const FourierTaylor& chi, const FourierTaylor& f,
                                 const TruncationPolicy& pol) {
    require_same_dim(chi, f, "lie_series_apply");
    LieSeriesResult res;
    res.value = f;
    if (chi.empty() || f.empty()) return res;

    OpStats stats;
    const double base_norm = weighted_norm(f, pol.loss_domain);
    const double floor = pol.tail_rel_tol * base_norm;

    FourierTaylor term = f;  // (1/s!) L_chi^s f
    double prev_norm = base_norm;
    for (int s = 1; s <= pol.max_lie_order; ++s) {
        term = poisson_bracket(chi, term, pol, &stats);
        term *= 1.0 / static_cast<double>(s);
        if (term.empty()) {
            res.tail_norm = 0.0;
            res.tail_decreasing = true;
            break;
        }
        const double norm = weighted_norm(term, pol.loss_domain);
        res.value += term;
        res.orders_used = s;
        res.tail_norm = norm;
        res.tail_decreasing = norm <= prev_norm;
        prev_norm = norm;
        if (norm <= floor) break;
    }
    // tail_norm doubles as the estimate of the omitted orders.
    res.truncation_loss = stats.truncation_loss + res.tail_norm;
    return res;
}

FourierTaylor angle_average(const FourierTaylor& f) {
    std::vector<Term> out;
    for (const Term& t : f.terms()) {
        if (t.index.is_angle_constant()) out.push_back(t);
    }
    return make_series_presorted(f.dim(), std::move(out));
}

FourierTaylor grade_project(const FourierTaylor& f, int grade) {
    if (grade < 0) return FourierTaylor::zero(f.dim());
    std::vector<Term> out;
    for (const Term& t : f.terms()) {
        if (t.index.p_degree() == grade) out.push_back(t);
    }
    return make_series_presorted(f.dim(), std::move(out));
}

double weighted_norm(const FourierTaylor& f, const DomainParams& dom) {
    return kernels::weighted_norm_terms(f.terms(), dom);
}

double evaluate(const FourierTaylor& f, std::span<const double> p, std::span<const double> q) {
    if (static_cast<int>(p.size()) != f.dim() || static_cast<int>(q.size()) != f.dim()) {
        throw DimensionMismatch("evaluate: point dimension mismatch");
    }
    Complex sum(0.0, 0.0);
    double scale = 0.0;
    for (const Term& t : f.terms()) {
        double mono = 1.0;
        double phase = 0.0;
        for (int j = 0; j < f.dim(); ++j) {
            for (int r = 0; r < t.index.m(j); ++r) mono *= p[static_cast<std::size_t>(j)];
            phase += t.index.k(j) * q[static_cast<std::size_t>(j)];
        }
        const Complex contrib = t.coeff * mono * Complex(std::cos(phase), std::sin(phase));
        sum += contrib;
        scale += std::abs(contrib);
    }
    if (std::abs(sum.imag()) > 1e-12 * std::max(1.0, scale)) {
        throw InternalError("evaluate: imaginary residue " + std::to_string(sum.imag()) +
                            " exceeds tolerance (series not Hermitian-symmetric)");
    }
    return sum.real();
}

std::vector<double> linear_k0_coefficients(const FourierTaylor& f) {
    std::vector<double> a(static_cast<std::size_t>(f.dim()), 0.0);
    for (const Term& t : f.terms()) {
        if (!t.index.is_angle_constant() || t.index.p_degree() != 1) continue;
        for (int j = 0; j < f.dim(); ++j) {
            if (t.index.m(j) == 1) {
                if (std::abs(t.coeff.imag()) > 1e-12 * std::max(1.0, std::abs(t.coeff))) {
                    throw InternalError("linear_k0_coefficients: complex linear coefficient");
                }
                a[static_cast<std::size_t>(j)] = t.coeff.real();
            }
        }
    }
    return a;
}

FourierTaylor drop_constant(const FourierTaylor& f) {
    std::vector<Term> out;
    for (const Term& t : f.terms()) {
        if (t.index.is_zero()) continue;
        out.push_back(t);
    }
    return make_series_presorted(f.dim(), std::move(out));
}

}  // namespace kamknob
