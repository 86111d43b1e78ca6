#pragma once

#include <span>
#include <vector>

#include "kamknob/series.hpp"

namespace kamknob {

// Accumulates the weighted norm of everything an operation dropped
// (cap overflow, pruning, Lie tails) at the policy's loss domain.
struct OpStats {
    double truncation_loss = 0.0;
};

// Truncated product; indices add componentwise.
FourierTaylor multiply(const FourierTaylor& f, const FourierTaylor& g,
                       const TruncationPolicy& pol, OpStats* stats = nullptr);

// {f,g} = sum_j (df/dq_j dg/dp_j - df/dp_j dg/dq_j).
// Maps P_l x P_m into P_{l+m-1}.
FourierTaylor poisson_bracket(const FourierTaylor& f, const FourierTaylor& g,
                              const TruncationPolicy& pol, OpStats* stats = nullptr);

struct LieSeriesResult {
    FourierTaylor value;
    int orders_used = 0;       // highest s included
    double tail_norm = 0.0;    // weighted norm of the last included term
    bool tail_decreasing = true;
    double truncation_loss = 0.0;
};

// sum_{s=0}^{s_max} (1/s!) L_chi^s f with L_chi f = poisson_bracket(chi, f),
// cut at pol.max_lie_order or once a term norm falls below
// pol.tail_rel_tol * ||f|| at pol.loss_domain.  tail_decreasing reports
// whether the term norms were still shrinking at the final included order.
LieSeriesResult lie_series_apply(const FourierTaylor& chi, const FourierTaylor& f,
                                 const TruncationPolicy& pol);

// k = 0 part of f.
FourierTaylor angle_average(const FourierTaylor& f);

// |m| = grade part of f; grade -1 yields the zero series.
FourierTaylor grade_project(const FourierTaylor& f, int grade);

// sum_k |f_k|_rho e^{|k| sigma} with |f_k|_rho = sum_m |c_{m,k}| rho^|m|
// (coefficient-sum upper bound for the sup over the polydisc).
double weighted_norm(const FourierTaylor& f, const DomainParams& dom);

// Real value of f at real (p, q); throws InternalError if the imaginary
// residue exceeds 1e-12 relative to the evaluation scale (a series that is
// not Hermitian-symmetric).
double evaluate(const FourierTaylor& f, std::span<const double> p, std::span<const double> q);

// Exact index-shift derivatives.
FourierTaylor d_dp(const FourierTaylor& f, int j);
FourierTaylor d_dq(const FourierTaylor& f, int j);

// Coefficients a_j of the k = 0, |m| = 1 part sum_j a_j p_j.
// Hermitian symmetry makes them real; the imaginary parts are checked.
std::vector<double> linear_k0_coefficients(const FourierTaylor& f);

// f minus its k = 0, m = 0 constant term.
FourierTaylor drop_constant(const FourierTaylor& f);

}  // namespace kamknob
