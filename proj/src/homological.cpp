#include "kamknob/homological.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "kamknob/errors.hpp"

namespace kamknob {

double DiophantineFrequency::dot(const MultiIndex& idx) const {
    double s = 0.0;
    for (int j = 0; j < dim(); ++j) s += omega[static_cast<std::size_t>(j)] * idx.k(j);
    return s;
}

namespace {

double dot_k(const std::vector<double>& omega, const std::vector<int>& k) {
    double s = 0.0;
    for (std::size_t j = 0; j < omega.size(); ++j) s += omega[j] * k[j];
    return s;
}

int order_of(const std::vector<int>& k) {
    int s = 0;
    for (int v : k) s += std::abs(v);
    return s;
}

// Enumerates one representative per +-k pair (first nonzero component > 0)
// with |k| <= k_max.
void for_each_wavevector(int n, int k_max, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int j, int budget) {
        if (j == n) {
            if (order_of(k) == 0) return;
            for (int v : k) {
                if (v > 0) break;
                if (v < 0) return;  // keep only the +k representative
            }
            fn(k);
            return;
        }
        for (int v = -budget; v <= budget; ++v) {
            k[static_cast<std::size_t>(j)] = v;
            rec(j + 1, budget - std::abs(v));
        }
        k[static_cast<std::size_t>(j)] = 0;
    };
    rec(0, k_max);
}

}  // namespace

DiophantineReport check_diophantine(const DiophantineFrequency& freq, int k_check) {
    DiophantineReport rep;
    rep.k_check = k_check;
    rep.per_order.resize(static_cast<std::size_t>(k_check));
    for (int o = 1; o <= k_check; ++o) {
        auto& row = rep.per_order[static_cast<std::size_t>(o - 1)];
        row.order = o;
        row.min_divisor = std::numeric_limits<double>::infinity();
        row.bound = freq.gamma * std::pow(static_cast<double>(o), -freq.tau);
    }
    for_each_wavevector(freq.dim(), k_check, [&](const std::vector<int>& k) {
        const int o = order_of(k);
        const double div = std::abs(dot_k(freq.omega, k));
        auto& row = rep.per_order[static_cast<std::size_t>(o - 1)];
        if (div < row.min_divisor) {
            row.min_divisor = div;
            row.argmin_k = k;
        }
        const double bound = freq.gamma * std::pow(static_cast<double>(o), -freq.tau);
        if (div <= bound) {
            rep.pass = false;
            rep.violations.push_back(k);
        }
        const double margin = bound > 0.0 ? div / bound : div;
        if (margin < rep.worst_margin) {
            rep.worst_margin = margin;
            rep.worst_k = k;
        }
    });
    return rep;
}

HomologicalResult solve_homological(const FourierTaylor& rhs, const DiophantineFrequency& freq) {
    if (rhs.dim() != freq.dim()) {
        throw DimensionMismatch("solve_homological: rhs and frequency dimensions differ");
    }
    HomologicalResult res;
    std::vector<Term> out;
    out.reserve(rhs.size());
    for (const Term& t : rhs.terms()) {
        if (t.index.is_angle_constant()) {
            if (std::abs(t.coeff) > 1e-14) {
                throw AverageNotRemoved("solve_homological: rhs has a k=0 coefficient of size " +
                                        std::to_string(std::abs(t.coeff)));
            }
            continue;  // rounding dust on the average is dropped
        }
        const double div = freq.dot(t.index);
        if (std::abs(div) < 1e-13 * t.index.fourier_order()) {
            std::vector<int> k(static_cast<std::size_t>(rhs.dim()));
            for (int j = 0; j < rhs.dim(); ++j) k[static_cast<std::size_t>(j)] = t.index.k(j);
            throw ZeroDivisor("solve_homological: resonant wavevector " + t.index.to_string(), k);
        }
        res.min_divisor = std::min(res.min_divisor, std::abs(div));
        // chi_{m,k} = -c / (i div) = c * (i / div)
        out.push_back(Term{t.index, Complex(-t.coeff.imag(), t.coeff.real()) / div});
    }
    res.chi = make_series_presorted(rhs.dim(), std::move(out));
    return res;
}

}  // namespace kamknob
