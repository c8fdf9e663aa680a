#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "rdalpha/distance.hpp"
#include "rdalpha/errors.hpp"
#include "rdalpha/graph.hpp"
#include "rdalpha/symmetric_matrix.hpp"

namespace rdalpha {

/// Convex-combination weight, validated to [0, 1] once at construction.
/// Per-operation sub-ranges (e.g. [1/2, 1)) are enforced by the
/// operations that need them.
class Alpha {
public:
    Alpha(double value) : v_(value) {
        if (!(value >= 0.0 && value <= 1.0))
            throw domain_error("alpha must lie in [0, 1], got " + std::to_string(value));
    }
    double value() const noexcept { return v_; }

private:
    double v_;
};

namespace detail {

/// Kahan-compensated accumulator.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

} // namespace detail

/// Reciprocal transmissions of every vertex plus derived scalars.
struct TransmissionProfile {
    std::vector<double> rtr;
    double harary = 0.0;
    double rtr_max = 0.0;
    double rtr_min = 0.0;
    bool is_regular = false; // rtr_max - rtr_min <= regular_tol
    double regular_tol = 0.0;
};

/// rtr[i] = sum over j != i of 1/d(i,j); harary = half the total.
inline TransmissionProfile transmission_profile(const DistanceMatrix& d,
                                                double regular_tol = 1e-8) {
    const int n = d.order();
    if (n < 2) throw domain_error("reciprocal transmissions need n >= 2");
    TransmissionProfile out;
    out.regular_tol = regular_tol;
    out.rtr.resize(static_cast<std::size_t>(n));
    detail::CompensatedSum total;
    for (int i = 0; i < n; ++i) {
        detail::CompensatedSum row;
        for (int j = 0; j < n; ++j)
            if (j != i) row.add(1.0 / static_cast<double>(d(i, j)));
        out.rtr[static_cast<std::size_t>(i)] = row.sum;
        total.add(row.sum);
    }
    out.harary = 0.5 * total.sum;
    out.rtr_max = *std::max_element(out.rtr.begin(), out.rtr.end());
    out.rtr_min = *std::min_element(out.rtr.begin(), out.rtr.end());
    out.is_regular = (out.rtr_max - out.rtr_min) <= regular_tol;
    return out;
}

/// Arithmetic mean of the reciprocal transmissions over the neighbors
/// of `vertex`.
inline double neighbor_mean_transmission(const Graph& g, const DistanceMatrix& d, int vertex) {
    if (vertex < 0 || vertex >= g.order())
        throw domain_error("vertex index out of range");
    const auto& nb = g.neighbors(vertex);
    if (nb.empty())
        throw domain_error("vertex " + std::to_string(vertex) + " is isolated");
    const auto prof = transmission_profile(d);
    detail::CompensatedSum acc;
    for (int w : nb) acc.add(prof.rtr[static_cast<std::size_t>(w)]);
    return acc.sum / static_cast<double>(nb.size());
}

/// Diagonal alpha * rtr_i, off-diagonal (1 - alpha) / d(i,j).
inline SymmetricMatrix rd_alpha_matrix(const DistanceMatrix& d, Alpha alpha) {
    const int n = d.order();
    if (n < 2) throw domain_error("reciprocal distance matrices need n >= 2");
    const double a = alpha.value();
    const auto prof = transmission_profile(d);
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, a * prof.rtr[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j)
            m.set(i, j, (1.0 - a) / static_cast<double>(d(i, j)));
    }
    return m;
}

/// Diagonal alpha * deg(i), off-diagonal (1 - alpha) * [i ~ j].
/// Connectivity is not required (it is applied to complements).
inline SymmetricMatrix a_alpha_matrix(const Graph& g, Alpha alpha) {
    const int n = g.order();
    const double a = alpha.value();
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, a * static_cast<double>(g.degree(i)));
    for (const auto& [u, v] : g.edges()) m.set(u, v, 1.0 - a);
    return m;
}

/// Long-distance correction matrix: off-diagonal
/// (1 - alpha) * min{0, 1/d(i,j) - 1/2} (zero diagonal contribution),
/// diagonal alpha * sum over d(i,j) >= 3 of (1/d(i,j) - 1/2).
/// Identically zero whenever the diameter is at most 2.
inline SymmetricMatrix mstar_matrix(const DistanceMatrix& d, Alpha alpha) {
    const int n = d.order();
    if (n < 2) throw domain_error("mstar_matrix needs n >= 2");
    const double a = alpha.value();
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) {
        detail::CompensatedSum diag;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double excess = 1.0 / static_cast<double>(d(i, j)) - 0.5;
            if (d(i, j) >= 3) diag.add(excess);
            if (j > i) m.set(i, j, (1.0 - a) * std::min(0.0, excess));
        }
        m.set(i, i, a * diag.sum);
    }
    return m;
}

/// Closed-form squared Frobenius norm of RD_alpha:
/// alpha^2 * sum rtr_i^2 + (1-alpha)^2 * sum over ordered i != j of 1/d(i,j)^2.
inline double rd_alpha_frobenius_sq(const DistanceMatrix& d, Alpha alpha) {
    const int n = d.order();
    if (n < 2) throw domain_error("rd_alpha_frobenius_sq needs n >= 2");
    const double a = alpha.value();
    const auto prof = transmission_profile(d);
    detail::CompensatedSum rtr_sq;
    for (double r : prof.rtr) rtr_sq.add(r * r);
    detail::CompensatedSum recip_sq;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i) {
                const double r = 1.0 / static_cast<double>(d(i, j));
                recip_sq.add(r * r);
            }
    return a * a * rtr_sq.sum + (1.0 - a) * (1.0 - a) * recip_sq.sum;
}

} // namespace rdalpha
