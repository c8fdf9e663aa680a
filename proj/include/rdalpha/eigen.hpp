#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "rdalpha/errors.hpp"
#include "rdalpha/symmetric_matrix.hpp"

namespace rdalpha {

/// Eigenvalues sorted descending, with a grouping tolerance that
/// defines multiplicity classes (looser than the solver residual).
struct Spectrum {
    std::vector<double> values;
    double group_tol = 1e-8;

    int order() const noexcept { return static_cast<int>(values.size()); }

    double max() const { return values.front(); }
    double min() const { return values.back(); }

    /// Consecutive values closer than group_tol share a class.
    /// Returns (representative, multiplicity) pairs, descending.
    std::vector<std::pair<double, int>> multiplicity_classes() const {
        std::vector<std::pair<double, int>> classes;
        for (double v : values) {
            if (!classes.empty() && classes.back().first - v <= group_tol)
                ++classes.back().second;
            else
                classes.emplace_back(v, 1);
        }
        return classes;
    }

    int distinct_count() const { return static_cast<int>(multiplicity_classes().size()); }
};

struct EigOptions {
    // Convergence: off-diagonal Frobenius mass relative to ||A||_F.
    // Kept a few orders under the reporting precision so printed
    // 12-digit values are stable; desk-scale matrices converge in a
    // handful of sweeps regardless.
    double conv_tol = 1e-12;
    int max_sweeps = 100;
    double group_tol = 1e-8;
};

struct EigenSystem {
    Spectrum spectrum;
    std::vector<std::vector<double>> vectors; // vectors[k] pairs with spectrum.values[k]
};

namespace detail {

inline void jacobi_diagonalize(std::vector<double>& w, int n, const EigOptions& opt,
                               std::vector<double>* vectors) {
    auto at = [&w, n](int i, int j) -> double& {
        return w[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
    };
    for (double v : w)
        if (!std::isfinite(v)) throw numeric_error("non-finite matrix entry");

    double norm_sq = 0.0;
    for (double v : w) norm_sq += v * v;
    const double norm = std::sqrt(norm_sq);
    if (norm == 0.0) return;

    const double threshold = opt.conv_tol * norm;
    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
        return std::sqrt(2.0 * s);
    };

    for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
        if (off_norm() <= threshold) return;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta; // tan collapses to 1/(2*theta) without overflow
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double h = t * apq;
                at(p, p) -= h;
                at(q, q) += h;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    const double np = akp - s * (akq + tau * akp);
                    const double nq = akq + s * (akp - tau * akq);
                    at(k, p) = np;
                    at(p, k) = np;
                    at(k, q) = nq;
                    at(q, k) = nq;
                }
                if (vectors) {
                    auto& V = *vectors;
                    for (int k = 0; k < n; ++k) {
                        const std::size_t kp = static_cast<std::size_t>(k) * n +
                                               static_cast<std::size_t>(p);
                        const std::size_t kq = static_cast<std::size_t>(k) * n +
                                               static_cast<std::size_t>(q);
                        const double vkp = V[kp];
                        const double vkq = V[kq];
                        V[kp] = vkp - s * (vkq + tau * vkp);
                        V[kq] = vkq + s * (vkp - tau * vkq);
                    }
                }
            }
        }
    }
    if (off_norm() > threshold)
        throw convergence_error("Jacobi eigensolver did not converge in " +
                                std::to_string(opt.max_sweeps) + " sweeps");
}

} // namespace detail

/// Cyclic Jacobi diagonalization. Sweeps until the off-diagonal
/// Frobenius mass drops below conv_tol * ||A||_F (cap: max_sweeps).
inline Spectrum eig_sym(const SymmetricMatrix& A, const EigOptions& opt = {}) {
    const int n = A.order();
    std::vector<double> w = A.data();
    detail::jacobi_diagonalize(w, n, opt, nullptr);
    Spectrum spec;
    spec.group_tol = opt.group_tol;
    spec.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        spec.values[static_cast<std::size_t>(i)] =
            w[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(i)];
    std::sort(spec.values.begin(), spec.values.end(), std::greater<>());
    return spec;
}

/// Same, keeping eigenvectors (for equality-condition diagnostics).
inline EigenSystem eig_sym_vectors(const SymmetricMatrix& A, const EigOptions& opt = {}) {
    const int n = A.order();
    std::vector<double> w = A.data();
    std::vector<double> V(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        V[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(i)] = 1.0;
    detail::jacobi_diagonalize(w, n, opt, &V);

    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    auto diag = [&](int i) {
        return w[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(i)];
    };
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return diag(a) > diag(b); });

    EigenSystem out;
    out.spectrum.group_tol = opt.group_tol;
    out.spectrum.values.reserve(static_cast<std::size_t>(n));
    out.vectors.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const int col = idx[static_cast<std::size_t>(k)];
        out.spectrum.values.push_back(diag(col));
        auto& vec = out.vectors[static_cast<std::size_t>(k)];
        vec.resize(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r)
            vec[static_cast<std::size_t>(r)] =
                V[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(col)];
    }
    return out;
}

/// Largest minus smallest eigenvalue.
inline double spread_of(const Spectrum& spec) {
    if (spec.values.empty()) throw domain_error("spread of an empty spectrum");
    return spec.values.front() - spec.values.back();
}

inline double frobenius_norm_sq(const SymmetricMatrix& A) {
    double s = 0.0;
    for (double v : A.data()) s += v * v;
    return s;
}

// ---------------------------------------------------------------------------
// Quotient matrices and interlacing
// ---------------------------------------------------------------------------

struct QuotientResult {
    int cells = 0;
    std::vector<double> entries; // row-major cells x cells, generally nonsymmetric
    Spectrum eigenvalues;
    /// Closed-form (larger, smaller) eigenvalue pair when cells == 2.
    std::optional<std::pair<double, double>> pair2x2;

    double entry(int s, int t) const {
        return entries[static_cast<std::size_t>(s) * static_cast<std::size_t>(cells) +
                       static_cast<std::size_t>(t)];
    }
};

/// Row-averaged block quotient B[s][t] = (1/|V_s|) * sum of A over
/// V_s x V_t. Eigenvalues come from the similar symmetric matrix
/// D^{1/2} B D^{-1/2}, D = diag(|V_s|), so the symmetric kernel does
/// all the work; they interlace the eigenvalues of A.
inline QuotientResult quotient_matrix(const SymmetricMatrix& A,
                                      const std::vector<std::vector<int>>& partition,
                                      const EigOptions& opt = {}) {
    const int n = A.order();
    const int cells = static_cast<int>(partition.size());
    if (cells == 0) throw domain_error("partition has no cells");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int covered = 0;
    for (const auto& cell : partition) {
        if (cell.empty()) throw domain_error("partition has an empty cell");
        for (int v : cell) {
            if (v < 0 || v >= n) throw domain_error("partition index out of range");
            if (seen[static_cast<std::size_t>(v)]) throw domain_error("partition cells overlap");
            seen[static_cast<std::size_t>(v)] = 1;
            ++covered;
        }
    }
    if (covered != n) throw domain_error("partition does not cover all indices");

    std::vector<double> block_sum(static_cast<std::size_t>(cells) *
                                  static_cast<std::size_t>(cells));
    for (int s = 0; s < cells; ++s)
        for (int t = 0; t < cells; ++t) {
            double acc = 0.0;
            for (int i : partition[static_cast<std::size_t>(s)])
                for (int j : partition[static_cast<std::size_t>(t)]) acc += A(i, j);
            block_sum[static_cast<std::size_t>(s) * static_cast<std::size_t>(cells) +
                      static_cast<std::size_t>(t)] = acc;
        }

    QuotientResult out;
    out.cells = cells;
    out.entries.resize(block_sum.size());
    SymmetricMatrix sym(cells);
    for (int s = 0; s < cells; ++s) {
        const double ns = static_cast<double>(partition[static_cast<std::size_t>(s)].size());
        for (int t = 0; t < cells; ++t) {
            const double sum =
                block_sum[static_cast<std::size_t>(s) * static_cast<std::size_t>(cells) +
                          static_cast<std::size_t>(t)];
            out.entries[static_cast<std::size_t>(s) * static_cast<std::size_t>(cells) +
                        static_cast<std::size_t>(t)] = sum / ns;
            const double nt = static_cast<double>(partition[static_cast<std::size_t>(t)].size());
            if (t >= s) sym.set(s, t, sum / std::sqrt(ns * nt));
        }
    }
    out.eigenvalues = eig_sym(sym, opt);

    if (cells == 2) {
        const double b11 = out.entry(0, 0), b12 = out.entry(0, 1);
        const double b21 = out.entry(1, 0), b22 = out.entry(1, 1);
        const double tr = b11 + b22;
        const double disc = std::max(0.0, tr * tr - 4.0 * (b11 * b22 - b12 * b21));
        const double root = std::sqrt(disc);
        out.pair2x2 = {0.5 * (tr + root), 0.5 * (tr - root)};
    }
    return out;
}

/// Cauchy interlacing test: lambda_i(outer) >= inner_i >= lambda_{i+n-m}(outer),
/// within tol on both sides.
inline bool interlaces(const Spectrum& inner, const Spectrum& outer, double tol) {
    const int m = inner.order();
    const int n = outer.order();
    if (m > n) throw domain_error("inner spectrum larger than outer");
    for (int i = 0; i < m; ++i) {
        const double v = inner.values[static_cast<std::size_t>(i)];
        if (v > outer.values[static_cast<std::size_t>(i)] + tol) return false;
        if (v < outer.values[static_cast<std::size_t>(i + n - m)] - tol) return false;
    }
    return true;
}

/// Both Weyl inequality families for C = A + B; an eigensolver self-test.
inline bool weyl_check(const SymmetricMatrix& A, const SymmetricMatrix& B, double tol,
                       const EigOptions& opt = {}) {
    const int n = A.order();
    if (B.order() != n) throw domain_error("weyl_check: order mismatch");
    const auto a = eig_sym(A, opt).values;
    const auto b = eig_sym(B, opt).values;
    const auto c = eig_sym(A + B, opt).values;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            // lambda_i(C) >= lambda_j(A) + lambda_{i-j+n}(B), 1-based
            const double lo = a[static_cast<std::size_t>(j)] +
                              b[static_cast<std::size_t>(i - j + n - 1)];
            if (c[static_cast<std::size_t>(i)] < lo - tol) return false;
        }
        for (int j = 0; j <= i; ++j) {
            // lambda_i(C) <= lambda_j(A) + lambda_{i-j+1}(B), 1-based
            const double hi = a[static_cast<std::size_t>(j)] +
                              b[static_cast<std::size_t>(i - j)];
            if (c[static_cast<std::size_t>(i)] > hi + tol) return false;
        }
    }
    return true;
}

} // namespace rdalpha
