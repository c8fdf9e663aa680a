#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "rdalpha/eigen.hpp"
#include "rdalpha/errors.hpp"
#include "rdalpha/rd_matrices.hpp"
#include "rdalpha/symmetric_matrix.hpp"

namespace rdalpha {

namespace detail {

inline Spectrum sorted_spectrum(std::vector<double> values, double group_tol = 1e-8) {
    std::sort(values.begin(), values.end(), std::greater<>());
    return Spectrum{std::move(values), group_tol};
}

} // namespace detail

/// sigma(RD_alpha(K_n)) = { n-1, (alpha*n - 1) with multiplicity n-1 }.
inline Spectrum spectrum_complete(int n, Alpha alpha) {
    if (n < 2) throw domain_error("spectrum_complete needs n >= 2");
    if (alpha.value() >= 1.0)
        throw domain_error("spectrum_complete requires alpha in [0, 1)");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n));
    values.push_back(static_cast<double>(n - 1));
    const double rest = alpha.value() * n - 1.0;
    for (int i = 1; i < n; ++i) values.push_back(rest);
    return detail::sorted_spectrum(std::move(values));
}

/// sigma(RD_alpha(K_{a,b})), n = a + b:
///   (alpha(n+b) - 1)/2 with multiplicity a-1,
///   (alpha(n+a) - 1)/2 with multiplicity b-1,
///   and the pair ((alpha + 1/2)n - 1 +- sqrt((alpha - 1/2)^2 (a-b)^2
///   + 4 (1-alpha)^2 ab)) / 2.
inline Spectrum spectrum_complete_bipartite(int a, int b, Alpha alpha) {
    if (a < 1 || b < 1) throw domain_error("spectrum_complete_bipartite needs a, b >= 1");
    const double al = alpha.value();
    const double n = static_cast<double>(a + b);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(a + b));
    const double side_a = (al * (n + b) - 1.0) / 2.0;
    const double side_b = (al * (n + a) - 1.0) / 2.0;
    for (int i = 0; i < a - 1; ++i) values.push_back(side_a);
    for (int i = 0; i < b - 1; ++i) values.push_back(side_b);
    const double diff = static_cast<double>(a - b);
    const double disc = (al - 0.5) * (al - 0.5) * diff * diff +
                        4.0 * (1.0 - al) * (1.0 - al) * a * b;
    const double mid = (al + 0.5) * n - 1.0;
    const double root = std::sqrt(disc);
    values.push_back(0.5 * (mid + root)); // Perron value for alpha < 1
    values.push_back(0.5 * (mid - root));
    return detail::sorted_spectrum(std::move(values));
}

// ---------------------------------------------------------------------------
// Block decomposition of bordered matrices with z repeated blocks
// ---------------------------------------------------------------------------

/// Layout: a t x t block E bordered by z copies of the t x s block
/// gamma; the s x s block F sits on the diagonal of each copy and the
/// s x s block Q couples distinct copies. Assembled order is t + z*s.
struct BlockForm {
    SymmetricMatrix E;
    std::vector<double> gamma; // t x s, row-major
    SymmetricMatrix F;
    SymmetricMatrix Q;
    int copies = 1;

    int t() const { return E.order(); }
    int s() const { return F.order(); }
};

inline void validate_block_form(const BlockForm& bf) {
    if (bf.copies < 1) throw domain_error("block form needs copies >= 1");
    if (bf.Q.order() != bf.F.order())
        throw domain_error("block form: F and Q orders differ");
    if (bf.gamma.size() !=
        static_cast<std::size_t>(bf.t()) * static_cast<std::size_t>(bf.s()))
        throw domain_error("block form: gamma shape mismatch");
}

inline SymmetricMatrix assemble_block_form(const BlockForm& bf) {
    validate_block_form(bf);
    const int t = bf.t(), s = bf.s(), z = bf.copies;
    SymmetricMatrix m(t + z * s);
    for (int i = 0; i < t; ++i)
        for (int j = i; j < t; ++j) m.set(i, j, bf.E(i, j));
    for (int c = 0; c < z; ++c) {
        const int base = t + c * s;
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < s; ++j)
                m.set(i, base + j,
                      bf.gamma[static_cast<std::size_t>(i) * static_cast<std::size_t>(s) +
                               static_cast<std::size_t>(j)]);
        for (int i = 0; i < s; ++i)
            for (int j = i; j < s; ++j) m.set(base + i, base + j, bf.F(i, j));
        for (int c2 = c + 1; c2 < z; ++c2) {
            const int base2 = t + c2 * s;
            for (int i = 0; i < s; ++i)
                for (int j = 0; j < s; ++j) m.set(base + i, base2 + j, bf.Q(i, j));
        }
    }
    return m;
}

struct BlockDecomposition {
    std::vector<double> repeated;  // sigma(F - Q), descending; each occurs `multiplicity` times
    int multiplicity = 0;          // copies - 1
    SymmetricMatrix reduced;       // order s + t; holds the remaining eigenvalues
};

/// Splits sigma(assembled) into sigma(F - Q) repeated (copies - 1)
/// times plus the spectrum of the reduced matrix
/// [[E, sqrt(z) gamma], [sqrt(z) gamma^T, F + (z-1) Q]].
inline BlockDecomposition block_decompose(const BlockForm& bf, const EigOptions& opt = {}) {
    validate_block_form(bf);
    const int t = bf.t(), s = bf.s(), z = bf.copies;

    SymmetricMatrix fq(s);
    for (int i = 0; i < s; ++i)
        for (int j = i; j < s; ++j) fq.set(i, j, bf.F(i, j) - bf.Q(i, j));

    SymmetricMatrix reduced(t + s);
    const double rz = std::sqrt(static_cast<double>(z));
    for (int i = 0; i < t; ++i)
        for (int j = i; j < t; ++j) reduced.set(i, j, bf.E(i, j));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < s; ++j)
            reduced.set(i, t + j,
                        rz * bf.gamma[static_cast<std::size_t>(i) * static_cast<std::size_t>(s) +
                                      static_cast<std::size_t>(j)]);
    for (int i = 0; i < s; ++i)
        for (int j = i; j < s; ++j)
            reduced.set(t + i, t + j, bf.F(i, j) + static_cast<double>(z - 1) * bf.Q(i, j));

    BlockDecomposition out{.repeated = {}, .multiplicity = z - 1, .reduced = reduced};
    if (z > 1) out.repeated = eig_sym(fq, opt).values;
    return out;
}

// ---------------------------------------------------------------------------
// Double stars
// ---------------------------------------------------------------------------

/// The 4 x 4 matrix (rows: root u, root v, v's leaf class scaled by
/// sqrt(n), u's leaf class scaled by sqrt(m)) left after both leaf
/// classes of S_{m,n} are folded by the block decomposition.
inline SymmetricMatrix double_star_reduced_matrix(int m, int n, Alpha alpha) {
    if (m < 1 || n < 1) throw domain_error("double star needs m, n >= 1");
    const double al = alpha.value();
    const double b = 1.0 - al;
    const double md = static_cast<double>(m), nd = static_cast<double>(n);
    const double sm = std::sqrt(md), sn = std::sqrt(nd);
    SymmetricMatrix u(4);
    u.set(0, 0, al * (md + 0.5 * nd + 1.0));
    u.set(1, 1, al * (nd + 0.5 * md + 1.0));
    u.set(2, 2, al * (0.5 * nd + md / 3.0 + 1.0) + 0.5 * b * (nd - 1.0));
    u.set(3, 3, al * (0.5 * md + nd / 3.0 + 1.0) + 0.5 * b * (md - 1.0));
    u.set(0, 1, b);
    u.set(0, 2, 0.5 * b * sn);
    u.set(0, 3, b * sm);
    u.set(1, 2, b * sn);
    u.set(1, 3, 0.5 * b * sm);
    u.set(2, 3, b * sm * sn / 3.0);
    return u;
}

/// sigma(RD_alpha(S_{m,n})): the two leaf-class eigenvalue families
/// plus the four eigenvalues of the reduced 4 x 4 matrix. The leaf
/// class hanging off v (n leaves, reciprocal transmission
/// n/2 + m/3 + 1) contributes its value with multiplicity n - 1, and
/// u's class with multiplicity m - 1, as the two fold stages force.
inline Spectrum spectrum_double_star(int m, int n, Alpha alpha, const EigOptions& opt = {}) {
    if (m < 1 || n < 1) throw domain_error("double star needs m, n >= 1");
    const double al = alpha.value();
    const double b = 1.0 - al;
    const double md = static_cast<double>(m), nd = static_cast<double>(n);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(m + n + 2));
    const double v_leaf_class = al * (0.5 * nd + md / 3.0 + 1.0) - 0.5 * b;
    const double u_leaf_class = al * (0.5 * md + nd / 3.0 + 1.0) - 0.5 * b;
    for (int i = 0; i < n - 1; ++i) values.push_back(v_leaf_class);
    for (int i = 0; i < m - 1; ++i) values.push_back(u_leaf_class);
    const auto core = eig_sym(double_star_reduced_matrix(m, n, alpha), opt);
    values.insert(values.end(), core.values.begin(), core.values.end());
    return detail::sorted_spectrum(std::move(values), opt.group_tol);
}

} // namespace rdalpha
