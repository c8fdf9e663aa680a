#pragma once

#include <cmath>
#include <vector>

#include "rdalpha/errors.hpp"

namespace rdalpha {

/// Dense real symmetric matrix. set() writes both (i,j) and (j,i), so
/// the stored array is symmetric bit-for-bit.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int n)
        : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {
        if (n < 1) throw domain_error("matrix order must be >= 1");
    }

    int order() const noexcept { return n_; }

    double operator()(int i, int j) const { return a_[idx(i, j)]; }

    void set(int i, int j, double value) {
        a_[idx(i, j)] = value;
        a_[idx(j, i)] = value;
    }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < n_; ++i) t += a_[idx(i, i)];
        return t;
    }

    const std::vector<double>& data() const noexcept { return a_; }

    SymmetricMatrix& operator+=(const SymmetricMatrix& other) {
        if (other.n_ != n_) throw domain_error("matrix order mismatch");
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
        return *this;
    }

    friend SymmetricMatrix operator+(SymmetricMatrix lhs, const SymmetricMatrix& rhs) {
        lhs += rhs;
        return lhs;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    int n_;
    std::vector<double> a_;
};

} // namespace rdalpha
