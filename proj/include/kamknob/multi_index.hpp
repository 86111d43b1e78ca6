#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>

namespace kamknob {

// Exponent pair (m, k) of one series term c * p^m * exp(i k.q):
// m >= 0 componentwise (action powers), k signed (Fourier wavevector).
// The dimension is capped at kMaxDim so an index is a flat POD array
// with a cheap total order, which the series kernels sort and merge on.
class MultiIndex {
public:
    static constexpr int kMaxDim = 8;

    MultiIndex() = default;
    MultiIndex(std::span<const int> m, std::span<const int> k);

    int dim() const { return n_; }
    int m(int j) const { return data_[static_cast<std::size_t>(j)]; }
    int k(int j) const { return data_[static_cast<std::size_t>(kMaxDim + j)]; }

    int p_degree() const;       // |m| = sum_j m_j
    int fourier_order() const;  // |k| = sum_j |k_j|

    bool is_angle_constant() const { return fourier_order() == 0; }
    bool is_zero() const { return p_degree() == 0 && fourier_order() == 0; }

    MultiIndex conjugate() const;               // k -> -k
    MultiIndex sum(const MultiIndex& rhs) const;  // componentwise (m+m', k+k')
    MultiIndex with_m(int j, int value) const;

    friend constexpr auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

    std::string to_string() const;

private:
    std::int16_t n_ = 0;
    std::array<std::int16_t, 2 * kMaxDim> data_{};  // m[0..n), then k[0..n)
};

}  // namespace kamknob
