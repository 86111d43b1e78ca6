#pragma once

#include <limits>
#include <vector>

#include "kamknob/series.hpp"

namespace kamknob {

// Target frequency vector with its Diophantine parameters:
// |k.omega| > gamma |k|^-tau for all 0 < |k| (checkable up to a horizon).
struct DiophantineFrequency {
    std::vector<double> omega;
    double gamma = 0.5;
    double tau = 1.0;

    int dim() const { return static_cast<int>(omega.size()); }
    double dot(const MultiIndex& idx) const;
};

struct DiophantineOrderRow {
    int order = 0;           // |k|
    double min_divisor = 0;  // min |k.omega| over that order
    std::vector<int> argmin_k;
    double bound = 0;  // gamma |k|^-tau
};

struct DiophantineReport {
    bool pass = true;
    int k_check = 0;
    std::vector<DiophantineOrderRow> per_order;
    std::vector<std::vector<int>> violations;  // every k with |k.omega| <= gamma |k|^-tau
    std::vector<int> worst_k;                  // smallest margin |k.omega| |k|^tau / gamma
    double worst_margin = std::numeric_limits<double>::infinity();
};

// Exhaustive scan over 0 < |k| <= k_check (one representative per +-k pair).
// A failing check is a report, not an error.
DiophantineReport check_diophantine(const DiophantineFrequency& freq, int k_check);

struct HomologicalResult {
    FourierTaylor chi;
    double min_divisor = std::numeric_limits<double>::infinity();  // smallest |k.omega| used
};

// Solves L_chi(omega.p) + rhs = 0 for zero-average rhs, with
// L_chi f = poisson_bracket(chi, f): termwise chi_{m,k} = -rhs_{m,k} / (i k.omega).
// Throws AverageNotRemoved if rhs carries a k = 0 coefficient above 1e-14,
// ZeroDivisor if some |k.omega| < 1e-13 |k| (resonance up to rounding).
HomologicalResult solve_homological(const FourierTaylor& rhs, const DiophantineFrequency& freq);

}  // namespace kamknob
