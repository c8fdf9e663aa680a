#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "rdalpha/rdalpha.hpp"

using namespace rdalpha;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("alpha validates its range") {
    CHECK_THROWS_AS(Alpha(-0.1), domain_error);
    CHECK_THROWS_AS(Alpha(1.1), domain_error);
    CHECK(Alpha(0.0).value() == 0.0);
    CHECK(Alpha(1.0).value() == 1.0);
}

TEST_CASE("transmission profiles of the standard families") {
    for (int n : {2, 4, 7}) {
        auto prof = transmission_profile(apsp(complete_graph(n)));
        for (double r : prof.rtr) CHECK_THAT(r, WithinAbs(n - 1.0, 1e-13));
        CHECK_THAT(prof.harary, WithinAbs(n * (n - 1) / 2.0, 1e-12));
        CHECK(prof.is_regular);
    }

    auto p4 = transmission_profile(apsp(path_graph(4)));
    CHECK_THAT(p4.rtr[0], WithinAbs(11.0 / 6.0, 1e-14));
    CHECK_THAT(p4.rtr[1], WithinAbs(2.5, 1e-14));
    CHECK_THAT(p4.rtr[2], WithinAbs(2.5, 1e-14));
    CHECK_THAT(p4.rtr[3], WithinAbs(11.0 / 6.0, 1e-14));
    CHECK_THAT(p4.harary, WithinAbs(13.0 / 3.0, 1e-13));
    CHECK_FALSE(p4.is_regular);
    CHECK_THAT(p4.rtr_max, WithinAbs(2.5, 1e-14));
    CHECK_THAT(p4.rtr_min, WithinAbs(11.0 / 6.0, 1e-14));

    auto c4 = transmission_profile(apsp(cycle_graph(4)));
    for (double r : c4.rtr) CHECK_THAT(r, WithinAbs(2.5, 1e-14));
    CHECK(c4.is_regular);
    CHECK_THAT(c4.harary, WithinAbs(5.0, 1e-13));

    Graph k1(1, {});
    CHECK_THROWS_AS(transmission_profile(apsp(k1)), domain_error);
}

TEST_CASE("neighbor mean transmission") {
    Graph p4 = path_graph(4);
    auto d = apsp(p4);
    CHECK_THAT(neighbor_mean_transmission(p4, d, 1), WithinAbs(13.0 / 6.0, 1e-13));

    Graph k5 = complete_graph(5);
    CHECK_THAT(neighbor_mean_transmission(k5, apsp(k5), 2), WithinAbs(4.0, 1e-13));

    Graph star = complete_bipartite(1, 3);
    CHECK_THAT(neighbor_mean_transmission(star, apsp(star), 0), WithinAbs(2.0, 1e-13));

    Graph k1(1, {});
    CHECK_THROWS_AS(neighbor_mean_transmission(k1, apsp(k1), 0), domain_error);
}

TEST_CASE("rd_alpha_matrix entries") {
    auto d3 = apsp(path_graph(3));

    auto rt = rd_alpha_matrix(d3, Alpha(1.0));
    CHECK_THAT(rt(0, 0), WithinAbs(1.5, 1e-14));
    CHECK_THAT(rt(1, 1), WithinAbs(2.0, 1e-14));
    CHECK(rt(0, 1) == 0.0);

    auto rd = rd_alpha_matrix(d3, Alpha(0.0));
    CHECK(rd(0, 0) == 0.0);
    CHECK(rd(0, 1) == 1.0);
    CHECK(rd(0, 2) == 0.5);
    CHECK(rd(1, 2) == 1.0);

    auto half = rd_alpha_matrix(d3, Alpha(0.5));
    CHECK_THAT(half(0, 0), WithinAbs(0.75, 1e-14));
    CHECK_THAT(half(1, 1), WithinAbs(1.0, 1e-14));
    CHECK_THAT(half(2, 2), WithinAbs(0.75, 1e-14));
    CHECK_THAT(half(0, 1), WithinAbs(0.5, 1e-14));
    CHECK_THAT(half(0, 2), WithinAbs(0.25, 1e-14));

    Graph k1(1, {});
    CHECK_THROWS_AS(rd_alpha_matrix(apsp(k1), Alpha(0.0)), domain_error);
}

TEST_CASE("rd_alpha structural identities") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 10);
        Graph g = random_connected(n, 0.45, rng());
        auto d = apsp(g);
        auto prof = transmission_profile(d);
        for (int step = 0; step <= 10; ++step) {
            const double a = step / 10.0;
            auto m = rd_alpha_matrix(d, Alpha(a));
            // trace(RD_alpha) = 2 alpha H
            CHECK_THAT(m.trace(), WithinAbs(2.0 * a * prof.harary, 1e-9));
            // row sums equal the transmissions
            for (int i = 0; i < n; ++i) {
                double row = 0.0;
                for (int j = 0; j < n; ++j) row += m(i, j);
                CHECK_THAT(row, WithinAbs(prof.rtr[static_cast<std::size_t>(i)], 1e-10));
            }
        }
        // 2 RD_{1/2} = RT + RD entrywise
        auto half = rd_alpha_matrix(d, Alpha(0.5));
        auto rt = rd_alpha_matrix(d, Alpha(1.0));
        auto rd = rd_alpha_matrix(d, Alpha(0.0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK_THAT(2.0 * half(i, j), WithinAbs(rt(i, j) + rd(i, j), 1e-13));
    }
}

TEST_CASE("a_alpha_matrix") {
    Graph k2 = complete_graph(2);
    for (double a : {0.0, 0.3, 1.0}) {
        auto spec = eig_sym(a_alpha_matrix(k2, Alpha(a)));
        CHECK_THAT(spec.values[0], WithinAbs(1.0, 1e-12));
        CHECK_THAT(spec.values[1], WithinAbs(2.0 * a - 1.0, 1e-12));
    }

    Graph empty(4, {});
    CHECK(frobenius_norm_sq(a_alpha_matrix(empty, Alpha(0.7))) == 0.0);

    auto c4 = a_alpha_matrix(cycle_graph(4), Alpha(1.0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(c4(i, j) == (i == j ? 2.0 : 0.0));
}

TEST_CASE("mstar_matrix") {
    // diameter <= 2: identically zero
    for (const Graph& g : {complete_graph(5), cycle_graph(4), complete_bipartite(2, 3)})
        CHECK(frobenius_norm_sq(mstar_matrix(apsp(g), Alpha(0.6))) == 0.0);

    auto d4 = apsp(path_graph(4));
    auto m0 = mstar_matrix(d4, Alpha(0.0));
    CHECK_THAT(m0(0, 3), WithinAbs(-1.0 / 6.0, 1e-14));
    CHECK(m0(0, 1) == 0.0);
    CHECK(m0(0, 2) == 0.0);
    CHECK(m0(0, 0) == 0.0);

    auto m1 = mstar_matrix(d4, Alpha(1.0));
    CHECK_THAT(m1(0, 0), WithinAbs(-1.0 / 6.0, 1e-14));
    CHECK(m1(1, 1) == 0.0);
    CHECK(m1(2, 2) == 0.0);
    CHECK_THAT(m1(3, 3), WithinAbs(-1.0 / 6.0, 1e-14));
    CHECK(m1(0, 3) == 0.0);
}

TEST_CASE("closed-form Frobenius norm") {
    CHECK_THAT(rd_alpha_frobenius_sq(apsp(complete_graph(3)), Alpha(0.5)),
               WithinAbs(4.5, 1e-13));
    CHECK_THAT(rd_alpha_frobenius_sq(apsp(path_graph(3)), Alpha(0.0)), WithinAbs(4.5, 1e-13));

    std::mt19937_64 rng(505);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 10);
        Graph g = random_connected(n, 0.5, rng());
        auto d = apsp(g);
        auto prof = transmission_profile(d);
        // alpha = 1: only the transmission term remains
        double rtr_sq = 0.0;
        for (double r : prof.rtr) rtr_sq += r * r;
        CHECK_THAT(rd_alpha_frobenius_sq(d, Alpha(1.0)), WithinRel(rtr_sq, 1e-12));
        // closed form vs direct entry sum
        for (double a : {0.0, 0.25, 0.5, 0.75, 1.0})
            CHECK_THAT(rd_alpha_frobenius_sq(d, Alpha(a)),
                       WithinRel(frobenius_norm_sq(rd_alpha_matrix(d, Alpha(a))), 1e-9));
    }
}

TEST_CASE("transmission-regular graphs scale their spread linearly") {
    for (int n : {4, 6, 9, 12}) {
        Graph g = cycle_graph(n);
        auto d = apsp(g);
        const double s_rd = spread_of(eig_sym(rd_alpha_matrix(d, Alpha(0.0))));
        for (double a : {0.0, 0.25, 0.5, 0.75})
            CHECK_THAT(spread_of(eig_sym(rd_alpha_matrix(d, Alpha(a)))),
                       WithinAbs((1.0 - a) * s_rd, 1e-9));
    }
    for (int a_side : {2, 4, 6}) {
        Graph g = complete_bipartite(a_side, a_side);
        auto d = apsp(g);
        const double s_rd = spread_of(eig_sym(rd_alpha_matrix(d, Alpha(0.0))));
        for (double a : {0.0, 0.25, 0.5, 0.75})
            CHECK_THAT(spread_of(eig_sym(rd_alpha_matrix(d, Alpha(a)))),
                       WithinAbs((1.0 - a) * s_rd, 1e-9));
    }
}
