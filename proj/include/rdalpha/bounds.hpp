#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rdalpha/cliques.hpp"
#include "rdalpha/distance.hpp"
#include "rdalpha/eigen.hpp"
#include "rdalpha/errors.hpp"
#include "rdalpha/graph.hpp"
#include "rdalpha/rd_matrices.hpp"

namespace rdalpha {

enum class BoundKind { lower, upper, sandwich };

inline const char* to_string(BoundKind k) {
    switch (k) {
        case BoundKind::lower: return "lower";
        case BoundKind::upper: return "upper";
        default: return "sandwich";
    }
}

/// Uniform result of evaluating one published inequality on one graph.
struct BoundReport {
    std::string name;
    BoundKind kind = BoundKind::lower;
    double observed = 0.0;
    std::optional<double> bound_lo;
    std::optional<double> bound_hi;
    bool holds = false;
    double slack = 0.0;    // min signed distance to an active bound
    bool equality = false; // meaning is per-bound (see each operation)
    bool skipped = false;
    std::string skip_reason;
    std::map<std::string, double> context;
};

namespace detail {

inline double cmp_scale(double a, double b) {
    return std::max({1.0, std::abs(a), std::abs(b)});
}

/// Fills slack/holds from whichever sides are present. Comparison
/// tolerance is absolute, scaled by max(1, magnitudes).
inline void finish_report(BoundReport& r, double tol) {
    double slack = std::numeric_limits<double>::infinity();
    if (r.bound_lo) slack = std::min(slack, r.observed - *r.bound_lo);
    if (r.bound_hi) slack = std::min(slack, *r.bound_hi - r.observed);
    r.slack = slack;
    const double active = r.bound_lo && (!r.bound_hi || r.observed - *r.bound_lo <=
                                                            *r.bound_hi - r.observed)
                              ? *r.bound_lo
                              : (r.bound_hi ? *r.bound_hi : 0.0);
    r.holds = slack >= -tol * cmp_scale(r.observed, active);
}

inline bool value_equality(double a, double b, double tol) {
    return std::abs(a - b) <= tol * cmp_scale(a, b);
}

/// Everything the individual bounds share for one (graph, alpha).
struct BoundContext {
    const Graph& g;
    double alpha;
    double tol;
    DistanceMatrix dist;
    TransmissionProfile prof;
    Spectrum spec_alpha; // sigma(RD_alpha)
    Spectrum spec_rd;    // sigma(RD) at alpha = 0
    int diam;
    EigOptions eig;

    int n() const { return g.order(); }
    double spread_alpha() const { return spec_alpha.values.front() - spec_alpha.values.back(); }
    double spread_rd() const { return spec_rd.values.front() - spec_rd.values.back(); }
    double sum_rtr_sq() const {
        CompensatedSum acc;
        for (double r : prof.rtr) acc.add(r * r);
        return acc.sum;
    }
    double sum_recip_sq() const {
        CompensatedSum acc;
        for (int i = 0; i < n(); ++i)
            for (int j = 0; j < n(); ++j)
                if (j != i) {
                    const double r = 1.0 / static_cast<double>(dist(i, j));
                    acc.add(r * r);
                }
        return acc.sum;
    }
};

inline BoundContext make_bound_context(const Graph& g, Alpha alpha, double tol,
                                       const EigOptions& eig = {}) {
    DistanceMatrix dist = apsp(g); // throws connectivity_error when disconnected
    TransmissionProfile prof = transmission_profile(dist);
    Spectrum spec_alpha = eig_sym(rd_alpha_matrix(dist, alpha), eig);
    Spectrum spec_rd = alpha.value() == 0.0
                           ? spec_alpha
                           : eig_sym(rd_alpha_matrix(dist, Alpha(0.0)), eig);
    int diam = diameter(dist);
    return BoundContext{g,    alpha.value(), tol, std::move(dist), std::move(prof),
                        std::move(spec_alpha), std::move(spec_rd), diam, eig};
}

inline void base_context(BoundReport& r, const BoundContext& c) {
    r.context["alpha"] = c.alpha;
    r.context["n"] = static_cast<double>(c.n());
}

// --- individual bound implementations (preconditions already checked) ---

inline BoundReport mirsky_upper_impl(const BoundContext& c) {
    BoundReport r;
    r.name = "mirsky-upper";
    r.kind = BoundKind::upper;
    base_context(r, c);
    const double a = c.alpha;
    const double h = c.prof.harary;
    const double srtr = c.sum_rtr_sq();
    const double srec = c.sum_recip_sq();
    const double inner = 2.0 * a * a * srtr + 2.0 * (1.0 - a) * (1.0 - a) * srec -
                         (8.0 / c.n()) * a * a * h * h;
    r.bound_hi = std::sqrt(std::max(0.0, inner));
    r.observed = c.spread_alpha();
    finish_report(r, c.tol);
    // Stated equality condition: all interior eigenvalues collapse onto
    // the midpoint of the extremes (evaluated on RD_alpha itself).
    const auto& v = c.spec_alpha.values;
    const double mid = 0.5 * (v.front() + v.back());
    bool eq = true;
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        if (!value_equality(v[i], mid, c.tol)) { eq = false; break; }
    r.equality = eq;
    r.context["harary"] = h;
    return r;
}

inline BoundReport lambda1_bounds_impl(const BoundContext& c) {
    BoundReport r;
    r.name = "lambda1-two-sided";
    r.kind = BoundKind::sandwich;
    base_context(r, c);
    const int n = c.n();
    const double a = c.alpha;
    r.observed = c.spec_alpha.values.front();
    r.bound_lo = std::sqrt(c.sum_rtr_sq() / n);
    double hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        CompensatedSum acc;
        for (int j = 0; j < n; ++j)
            if (j != i)
                acc.add(std::sqrt(c.prof.rtr[static_cast<std::size_t>(j)] /
                                  c.prof.rtr[static_cast<std::size_t>(i)]) /
                        static_cast<double>(c.dist(i, j)));
        hi = std::max(hi, a * c.prof.rtr[static_cast<std::size_t>(i)] + (1.0 - a) * acc.sum);
    }
    r.bound_hi = hi;
    finish_report(r, c.tol);
    r.equality = c.prof.is_regular;
    return r;
}

inline BoundReport lambda1_harary_lower_impl(const BoundContext& c) {
    BoundReport r;
    r.name = "lambda1-harary-lower";
    r.kind = BoundKind::lower;
    base_context(r, c);
    r.observed = c.spec_alpha.values.front();
    r.bound_lo = 2.0 * c.prof.harary / c.n();
    finish_report(r, c.tol);
    r.equality = c.prof.is_regular;
    r.context["harary"] = c.prof.harary;
    return r;
}

inline BoundReport spread_lower_harary_impl(const BoundContext& c) {
    BoundReport r;
    r.name = "spread-harary-lower";
    r.kind = BoundKind::lower;
    base_context(r, c);
    r.observed = c.spread_alpha();
    r.bound_lo = 2.0 * (1.0 - c.alpha) * c.prof.harary / (c.n() - 1);
    finish_report(r, c.tol);
    r.equality = value_equality(r.observed, *r.bound_lo, c.tol);
    r.context["harary"] = c.prof.harary;
    return r;
}

inline BoundReport spread_lower_frobenius_impl(const BoundContext& c) {
    BoundReport r;
    r.name = "spread-frobenius-lower";
    r.kind = BoundKind::lower;
    base_context(r, c);
    const int n = c.n();
    const double fro = c.alpha * c.alpha * c.sum_rtr_sq() +
                       (1.0 - c.alpha) * (1.0 - c.alpha) * c.sum_recip_sq();
    auto f = [&](double x) {
        return x - std::sqrt(std::max(0.0, fro - x * x) / (n - 1));
    };
    const double x1 = std::sqrt(c.sum_rtr_sq() / n);
    const double x2 = 2.0 * c.prof.harary / n;
    // Both x choices are valid; f is increasing, so report the sharper.
    r.bound_lo = std::max(f(x1), f(x2));
    r.observed = c.spread_alpha();
    finish_report(r, c.tol);
    r.equality = value_equality(r.observed, *r.bound_lo, c.tol);
    r.context["x_rtr"] = x1;
    r.context["x_harary"] = x2;
    r.context["frobenius_sq"] = fro;
    return r;
}

inline BoundReport eigen_shift_impl(const BoundContext& c, int k /* 1-based */) {
    BoundReport r;
    r.name = "eigen-shift-sandwich";
    r.kind = BoundKind::sandwich;
    base_context(r, c);
    const double lam_rd = c.spec_rd.values[static_cast<std::size_t>(k - 1)];
    r.observed = c.spec_alpha.values[static_cast<std::size_t>(k - 1)];
    r.bound_lo = c.alpha * c.prof.rtr_min + (1.0 - c.alpha) * lam_rd;
    r.bound_hi = c.alpha * c.prof.rtr_max + (1.0 - c.alpha) * lam_rd;
    finish_report(r, c.tol);
    r.equality = c.prof.is_regular;
    r.context["k"] = static_cast<double>(k);
    return r;
}

/// Worst k of the per-eigenvalue sandwich; holds iff every k holds.
inline BoundReport eigen_shift_all_impl(const BoundContext& c) {
    BoundReport worst = eigen_shift_impl(c, 1);
    for (int k = 2; k <= c.n(); ++k) {
        BoundReport r = eigen_shift_impl(c, k);
        if (r.slack < worst.slack) worst = r;
    }
    return worst;
}

inline BoundReport spread_sandwich_impl(const BoundContext& c) {
    BoundReport r;
    r.name = "spread-transmission-sandwich";
    r.kind = BoundKind::sandwich;
    base_context(r, c);
    const double gap = c.prof.rtr_max - c.prof.rtr_min;
    const double base = (1.0 - c.alpha) * c.spread_rd();
    r.observed = c.spread_alpha();
    r.bound_lo = -c.alpha * gap + base;
    r.bound_hi = c.alpha * gap + base;
    finish_report(r, c.tol);
    r.equality = c.prof.is_regular;
    return r;
}

inline BoundReport spread_upper_diam2_impl(const BoundContext& c) {
    BoundReport r;
    r.name = "spread-upper-diam2";
    r.kind = BoundKind::upper;
    base_context(r, c);
    const Spectrum co = eig_sym(a_alpha_matrix(c.g.complement(), Alpha(c.alpha)), c.eig);
    const double s_co = co.values.front() - co.values.back();
    r.observed = c.spread_alpha();
    r.bound_hi = (1.0 - c.alpha) * c.n() + 0.5 * s_co;
    finish_report(r, c.tol);
    r.equality = c.prof.is_regular;
    r.context["complement_a_alpha_spread"] = s_co;
    return r;
}

inline BoundReport spread_upper_diam3_impl(const BoundContext& c) {
    BoundReport r;
    r.name = "spread-upper-diam3";
    r.kind = BoundKind::upper;
    base_context(r, c);
    const Spectrum sa = eig_sym(a_alpha_matrix(c.g, Alpha(c.alpha)), c.eig);
    const Spectrum sm = eig_sym(mstar_matrix(c.dist, Alpha(c.alpha)), c.eig);
    const double s_a = sa.values.front() - sa.values.back();
    const double s_m = sm.values.front() - sm.values.back();
    r.observed = c.spread_alpha();
    r.bound_hi = 0.5 * (1.0 - c.alpha) * c.n() + 0.5 * s_a + s_m;
    finish_report(r, c.tol);
    r.equality = value_equality(r.observed, *r.bound_hi, c.tol);
    r.context["a_alpha_spread"] = s_a;
    r.context["mstar_spread"] = s_m;
    return r;
}

/// Shared 2x2 quotient root-difference: sqrt((b11+b22)^2 - 4(b11 b22 - b12 b21)).
inline double quotient_root_gap(double b11, double b12, double b21, double b22) {
    const double tr = b11 + b22;
    const double disc = tr * tr - 4.0 * (b11 * b22 - b12 * b21);
    return std::sqrt(std::max(0.0, disc));
}

inline BoundReport spread_lower_bipartite_impl(const BoundContext& c) {
    BoundReport r;
    r.name = "spread-bipartite-lower";
    r.kind = BoundKind::lower;
    base_context(r, c);
    const int n = c.n();
    const double a = c.alpha;
    const auto [delta, verts] = max_degree_vertices(c.g);
    const double dd = static_cast<double>(delta);
    const double two_h = 2.0 * c.prof.harary;
    double best = -std::numeric_limits<double>::infinity();
    int best_vertex = -1;
    for (int v : verts) {
        CompensatedSum acc;
        for (int w : c.g.neighbors(v)) acc.add(c.prof.rtr[static_cast<std::size_t>(w)]);
        const double t_v = acc.sum / dd;
        const double rtr_v = c.prof.rtr[static_cast<std::size_t>(v)];
        const double closed = 0.5 * dd * (dd + 3.0); // within-N[v] off-diagonal mass
        const double b11 = (0.5 * (1.0 - a) * dd * (dd + 3.0) + a * dd * t_v + a * rtr_v) /
                           (dd + 1.0);
        const double cross = dd * t_v + rtr_v - closed;
        const double b12 = (1.0 - a) * cross / (dd + 1.0);
        const double b21 = (1.0 - a) * cross / (n - dd - 1.0);
        const double b22 = (a * (two_h - dd * t_v - rtr_v) +
                            (1.0 - a) * (two_h - 2.0 * dd * t_v - 2.0 * rtr_v + closed)) /
                           (n - dd - 1.0);
        const double gap = quotient_root_gap(b11, b12, b21, b22);
        if (gap > best) { best = gap; best_vertex = v; }
    }
    r.bound_lo = best;
    r.observed = c.spread_alpha();
    finish_report(r, c.tol);
    r.equality = value_equality(r.observed, *r.bound_lo, c.tol);
    r.context["max_degree"] = dd;
    r.context["max_degree_count"] = static_cast<double>(verts.size());
    r.context["best_vertex"] = static_cast<double>(best_vertex);
    return r;
}

inline BoundReport spread_lower_clique_impl(const BoundContext& c,
                                            const MaximumCliques& mc) {
    BoundReport r;
    r.name = "spread-clique-lower";
    r.kind = BoundKind::lower;
    base_context(r, c);
    const int n = c.n();
    const double a = c.alpha;
    const double w = static_cast<double>(mc.clique_number);
    const double two_h = 2.0 * c.prof.harary;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& clique : mc.cliques) {
        CompensatedSum acc;
        for (int v : clique) acc.add(c.prof.rtr[static_cast<std::size_t>(v)]);
        const double s = acc.sum;
        const double c11 = (a * s + (1.0 - a) * w * (w - 1.0)) / w;
        const double cross = s - w * (w - 1.0);
        const double c12 = (1.0 - a) * cross / w;
        const double c21 = (1.0 - a) * cross / (n - w);
        const double c22 = (a * (two_h - s) + (1.0 - a) * (two_h - 2.0 * s + w * (w - 1.0))) /
                           (n - w);
        best = std::max(best, quotient_root_gap(c11, c12, c21, c22));
    }
    r.bound_lo = best;
    r.observed = c.spread_alpha();
    finish_report(r, c.tol);
    r.equality = value_equality(r.observed, *r.bound_lo, c.tol);
    r.context["clique_number"] = w;
    r.context["clique_count"] = static_cast<double>(mc.cliques.size());
    return r;
}

inline BoundReport skip_report(const char* name, BoundKind kind, const BoundContext& c,
                               std::string reason) {
    BoundReport r;
    r.name = name;
    r.kind = kind;
    base_context(r, c);
    r.skipped = true;
    r.skip_reason = std::move(reason);
    return r;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Public bound operations. Direct calls enforce preconditions with
// errors; check_all converts precondition misses into skip records.
// ---------------------------------------------------------------------------

inline BoundReport mirsky_upper(const Graph& g, Alpha alpha, double tol = 1e-8) {
    if (g.order() < 3) throw domain_error("mirsky_upper needs n >= 3");
    return detail::mirsky_upper_impl(detail::make_bound_context(g, alpha, tol));
}

inline BoundReport lambda1_bounds(const Graph& g, Alpha alpha, double tol = 1e-8) {
    return detail::lambda1_bounds_impl(detail::make_bound_context(g, alpha, tol));
}

inline BoundReport lambda1_harary_lower(const Graph& g, Alpha alpha, double tol = 1e-8) {
    return detail::lambda1_harary_lower_impl(detail::make_bound_context(g, alpha, tol));
}

inline BoundReport spread_lower_harary(const Graph& g, Alpha alpha, double tol = 1e-8) {
    if (alpha.value() >= 1.0)
        throw domain_error("spread_lower_harary requires alpha in [0, 1)");
    return detail::spread_lower_harary_impl(detail::make_bound_context(g, alpha, tol));
}

inline BoundReport spread_lower_frobenius(const Graph& g, Alpha alpha, double tol = 1e-8) {
    if (alpha.value() < 0.5 || alpha.value() >= 1.0)
        throw domain_error("spread_lower_frobenius requires alpha in [1/2, 1)");
    return detail::spread_lower_frobenius_impl(detail::make_bound_context(g, alpha, tol));
}

inline BoundReport eigen_shift_bounds(const Graph& g, Alpha alpha, int k, double tol = 1e-8) {
    if (k < 1 || k > g.order())
        throw domain_error("eigen_shift_bounds: k out of range [1, n]");
    return detail::eigen_shift_impl(detail::make_bound_context(g, alpha, tol), k);
}

inline BoundReport spread_sandwich_transmission(const Graph& g, Alpha alpha,
                                                double tol = 1e-8) {
    return detail::spread_sandwich_impl(detail::make_bound_context(g, alpha, tol));
}

inline BoundReport spread_upper_diam2(const Graph& g, Alpha alpha, double tol = 1e-8) {
    auto c = detail::make_bound_context(g, alpha, tol);
    if (c.diam != 2)
        throw domain_error("spread_upper_diam2 requires diameter exactly 2, got " +
                           std::to_string(c.diam));
    return detail::spread_upper_diam2_impl(c);
}

inline BoundReport spread_upper_diam3(const Graph& g, Alpha alpha, double tol = 1e-8) {
    auto c = detail::make_bound_context(g, alpha, tol);
    if (c.diam < 3)
        throw domain_error("spread_upper_diam3 requires diameter >= 3, got " +
                           std::to_string(c.diam));
    return detail::spread_upper_diam3_impl(c);
}

inline BoundReport spread_lower_bipartite(const Graph& g, Alpha alpha, double tol = 1e-8) {
    auto c = detail::make_bound_context(g, alpha, tol);
    if (g.order() < 3) throw domain_error("spread_lower_bipartite needs n >= 3");
    if (!bipartition(g)) throw domain_error("spread_lower_bipartite needs a bipartite graph");
    const int delta = max_degree_vertices(g).first;
    if (delta > g.order() - 2)
        throw domain_error("spread_lower_bipartite needs max degree <= n-2; a star's "
                           "spectrum is available in closed form (complete bipartite)");
    return detail::spread_lower_bipartite_impl(c);
}

inline BoundReport spread_lower_clique(const Graph& g, Alpha alpha, double tol = 1e-8) {
    auto c = detail::make_bound_context(g, alpha, tol);
    if (g.order() < 3) throw domain_error("spread_lower_clique needs n >= 3");
    const auto mc = maximum_cliques(g);
    if (mc.clique_number >= g.order())
        throw domain_error("spread_lower_clique needs clique number <= n-1; the complete "
                           "graph's spread is n(1-alpha) in closed form");
    if (mc.clique_number < 2) throw domain_error("spread_lower_clique needs clique number >= 2");
    return detail::spread_lower_clique_impl(c, mc);
}

/// Runs every bound in a fixed order; bounds whose preconditions fail
/// come back as skip records rather than errors.
inline std::vector<BoundReport> check_all(const Graph& g, Alpha alpha, double tol = 1e-8) {
    if (g.order() < 2) throw domain_error("check_all needs n >= 2");
    auto c = detail::make_bound_context(g, alpha, tol);
    std::vector<BoundReport> out;
    out.reserve(11);

    if (c.n() >= 3)
        out.push_back(detail::mirsky_upper_impl(c));
    else
        out.push_back(detail::skip_report("mirsky-upper", BoundKind::upper, c, "n < 3"));

    out.push_back(detail::lambda1_bounds_impl(c));
    out.push_back(detail::lambda1_harary_lower_impl(c));

    if (c.alpha < 1.0)
        out.push_back(detail::spread_lower_harary_impl(c));
    else
        out.push_back(detail::skip_report("spread-harary-lower", BoundKind::lower, c,
                                          "alpha = 1"));

    if (c.alpha >= 0.5 && c.alpha < 1.0)
        out.push_back(detail::spread_lower_frobenius_impl(c));
    else
        out.push_back(detail::skip_report("spread-frobenius-lower", BoundKind::lower, c,
                                          "alpha outside [1/2, 1)"));

    out.push_back(detail::eigen_shift_all_impl(c));
    out.push_back(detail::spread_sandwich_impl(c));

    if (c.diam == 2)
        out.push_back(detail::spread_upper_diam2_impl(c));
    else
        out.push_back(detail::skip_report("spread-upper-diam2", BoundKind::upper, c,
                                          "diameter is " + std::to_string(c.diam) +
                                              ", not 2"));

    if (c.diam >= 3)
        out.push_back(detail::spread_upper_diam3_impl(c));
    else
        out.push_back(detail::skip_report("spread-upper-diam3", BoundKind::upper, c,
                                          "diameter < 3"));

    const auto parts = bipartition(g);
    const int delta = max_degree_vertices(g).first;
    if (c.n() < 3)
        out.push_back(detail::skip_report("spread-bipartite-lower", BoundKind::lower, c,
                                          "n < 3"));
    else if (!parts)
        out.push_back(detail::skip_report("spread-bipartite-lower", BoundKind::lower, c,
                                          "not bipartite"));
    else if (delta > c.n() - 2)
        out.push_back(detail::skip_report("spread-bipartite-lower", BoundKind::lower, c,
                                          "max degree n-1 (star): closed form applies"));
    else
        out.push_back(detail::spread_lower_bipartite_impl(c));

    if (c.n() < 3) {
        out.push_back(detail::skip_report("spread-clique-lower", BoundKind::lower, c, "n < 3"));
    } else {
        const auto mc = maximum_cliques(g);
        if (mc.clique_number >= c.n())
            out.push_back(detail::skip_report("spread-clique-lower", BoundKind::lower, c,
                                              "clique number = n (complete graph)"));
        else
            out.push_back(detail::spread_lower_clique_impl(c, mc));
    }
    return out;
}

} // namespace rdalpha
