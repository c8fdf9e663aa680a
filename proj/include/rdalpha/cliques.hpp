#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rdalpha/errors.hpp"
#include "rdalpha/graph.hpp"

namespace rdalpha {

struct MaximumCliques {
    int clique_number = 0;
    std::vector<std::vector<int>> cliques; // each sorted; list sorted lexicographically
};

namespace detail {

inline int popcount64(std::uint64_t x) {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_popcountll(x);
#else
    int c = 0;
    while (x) { x &= x - 1; ++c; }
    return c;
#endif
}

struct BronKerbosch {
    const std::vector<std::uint64_t>& adj;
    std::vector<std::vector<int>> maximal;

    void run(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (p == 0 && x == 0) {
            std::vector<int> clique;
            for (std::uint64_t m = r; m;) {
                int v = __builtin_ctzll(m);
                clique.push_back(v);
                m &= m - 1;
            }
            maximal.push_back(std::move(clique));
            return;
        }
        // Pivot on the vertex of P|X covering most of P.
        int pivot = -1, best = -1;
        for (std::uint64_t m = p | x; m;) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            int cover = popcount64(p & adj[static_cast<std::size_t>(v)]);
            if (cover > best) { best = cover; pivot = v; }
        }
        std::uint64_t candidates = p & ~adj[static_cast<std::size_t>(pivot)];
        for (std::uint64_t m = candidates; m;) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            const std::uint64_t nv = adj[static_cast<std::size_t>(v)];
            run(r | (1ull << v), p & nv, x & nv);
            p &= ~(1ull << v);
            x |= 1ull << v;
        }
    }
};

} // namespace detail

/// All cliques of maximum size omega(G), via Bron-Kerbosch with pivoting.
///
/// Worst-case exponential in n; `max_order` (default 64, also the hard
/// bitset ceiling) keeps it on desk-scale inputs.
inline MaximumCliques maximum_cliques(const Graph& g, int max_order = 64) {
    const int n = g.order();
    if (max_order > 64) max_order = 64;
    if (n > max_order)
        throw domain_error("maximum_cliques: order " + std::to_string(n) +
                           " exceeds the configured limit " + std::to_string(max_order));
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= 1ull << v;
        adj[static_cast<std::size_t>(v)] |= 1ull << u;
    }
    detail::BronKerbosch bk{adj, {}};
    const std::uint64_t all = (n == 64) ? ~0ull : ((1ull << n) - 1);
    bk.run(0, all, 0);

    MaximumCliques out;
    for (const auto& c : bk.maximal)
        out.clique_number = std::max(out.clique_number, static_cast<int>(c.size()));
    for (auto& c : bk.maximal)
        if (static_cast<int>(c.size()) == out.clique_number) out.cliques.push_back(std::move(c));
    std::sort(out.cliques.begin(), out.cliques.end());
    return out;
}

} // namespace rdalpha
