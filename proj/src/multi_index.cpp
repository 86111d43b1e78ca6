#include "kamknob/multi_index.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "kamknob/errors.hpp"

namespace kamknob {

MultiIndex::MultiIndex(std::span<const int> m, std::span<const int> k) {
    if (m.size() != k.size()) {
        throw DimensionMismatch("MultiIndex: m and k lengths differ");
    }
    if (m.size() > kMaxDim) {
        throw DimensionMismatch("MultiIndex: dimension exceeds " + std::to_string(kMaxDim));
    }
    n_ = static_cast<std::int16_t>(m.size());
    for (int j = 0; j < n_; ++j) {
        if (m[static_cast<std::size_t>(j)] < 0) {
            throw DimensionMismatch("MultiIndex: negative action power");
        }
        data_[static_cast<std::size_t>(j)] = static_cast<std::int16_t>(m[static_cast<std::size_t>(j)]);
        data_[static_cast<std::size_t>(kMaxDim + j)] =
            static_cast<std::int16_t>(k[static_cast<std::size_t>(j)]);
    }
}

int MultiIndex::p_degree() const {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += data_[static_cast<std::size_t>(j)];
    return s;
}

int MultiIndex::fourier_order() const {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += std::abs(data_[static_cast<std::size_t>(kMaxDim + j)]);
    return s;
}

MultiIndex MultiIndex::conjugate() const {
    MultiIndex out = *this;
    for (int j = 0; j < n_; ++j) {
        auto& v = out.data_[static_cast<std::size_t>(kMaxDim + j)];
        v = static_cast<std::int16_t>(-v);
    }
    return out;
}

MultiIndex MultiIndex::sum(const MultiIndex& rhs) const {
    MultiIndex out = *this;
    for (int j = 0; j < n_; ++j) {
        out.data_[static_cast<std::size_t>(j)] =
            static_cast<std::int16_t>(out.data_[static_cast<std::size_t>(j)] +
                                      rhs.data_[static_cast<std::size_t>(j)]);
        out.data_[static_cast<std::size_t>(kMaxDim + j)] =
            static_cast<std::int16_t>(out.data_[static_cast<std::size_t>(kMaxDim + j)] +
                                      rhs.data_[static_cast<std::size_t>(kMaxDim + j)]);
    }
    return out;
}

MultiIndex MultiIndex::with_m(int j, int value) const {
    MultiIndex out = *this;
    out.data_[static_cast<std::size_t>(j)] = static_cast<std::int16_t>(value);
    return out;
}

std::string MultiIndex::to_string() const {
    std::ostringstream os;
    os << "m=(";
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << m(j);
    os << ") k=(";
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << k(j);
    os << ")";
    return os.str();
}

}  // namespace kamknob
