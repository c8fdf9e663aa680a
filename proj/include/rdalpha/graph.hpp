#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdalpha/errors.hpp"

namespace rdalpha {

/// Simple undirected graph on the vertex set {0, ..., n-1}.
///
/// Immutable after construction. Construction rejects self-loops,
/// duplicate edges and out-of-range endpoints.
class Graph {
public:
    using Edge = std::pair<int, int>;

    Graph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 1)
            throw domain_error("graph order must be >= 1, got " + std::to_string(n));
        for (auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw domain_error("edge endpoint out of range [0," + std::to_string(n) +
                                   "): (" + std::to_string(u) + "," + std::to_string(v) + ")");
            if (u == v)
                throw domain_error("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw domain_error("duplicate edge in input");
        edges_ = std::move(edges);
        adj_.assign(static_cast<std::size_t>(n), {});
        for (const auto& [u, v] : edges_) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const {
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    Graph complement() const {
        std::vector<Edge> ce;
        ce.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2 - edges_.size());
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!adjacent(u, v)) ce.emplace_back(u, v);
        return Graph(n_, std::move(ce));
    }

    bool is_connected() const {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : neighbors(u))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

inline Graph complement(const Graph& g) { return g.complement(); }

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

enum class GraphFormat { graph6, edgelist };

/// graph6 decoder. Covers the single-byte (n <= 62) and 3-byte
/// (n <= 258047) order headers; the optional ">>graph6<<" prefix is
/// accepted and stripped.
inline Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw parse_error("empty graph6 string", base);

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size())
            throw parse_error("graph6 string truncated", base + text.size());
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw parse_error("invalid graph6 character '" + std::string(1, text[i]) + "'",
                              base + i);
        return c - 63;
    };

    std::size_t pos = 0;
    long n = 0;
    if (static_cast<unsigned char>(text[0]) == 126) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw parse_error("graph6 orders above 258047 are not supported", base + 1);
        n = (static_cast<long>(byte_at(1)) << 12) | (byte_at(2) << 6) | byte_at(3);
        pos = 4;
    } else {
        n = byte_at(0);
        pos = 1;
    }
    if (n < 1) throw parse_error("graph6 order must be >= 1", base);

    const long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() - pos < nbytes)
        throw parse_error("graph6 string truncated: expected " + std::to_string(nbytes) +
                          " adjacency bytes", base + text.size());
    if (text.size() - pos > nbytes)
        throw parse_error("trailing bytes after graph6 data", base + pos + nbytes);

    // Upper triangle, column by column: bit order (0,1),(0,2),(1,2),(0,3),...
    std::vector<Graph::Edge> edges;
    long bit = 0;
    int cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const int within = static_cast<int>(bit % 6);
            if (within == 0) cur = byte_at(pos + static_cast<std::size_t>(bit / 6));
            if (cur & (0x20 >> within)) edges.emplace_back(u, v);
        }
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

/// Edge-list format: one "u v" pair per line, 0-based, blank lines and
/// '#' comment lines ignored. Order is max endpoint + 1.
inline Graph parse_edgelist(std::string_view text) {
    std::vector<Graph::Edge> edges;
    int max_vertex = -1;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::size_t i = 0;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i < line.size() && line[i] != '#') {
            auto read_int = [&]() -> int {
                std::size_t start = i;
                while (i < line.size() && line[i] >= '0' && line[i] <= '9') ++i;
                if (i == start || i - start > 9)
                    throw parse_error("expected a non-negative vertex index", pos + start);
                return std::stoi(std::string(line.substr(start, i - start)));
            };
            int u = read_int();
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i >= line.size())
                throw parse_error("edge line has only one endpoint", pos + i);
            int v = read_int();
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i < line.size())
                throw parse_error("trailing characters after edge", pos + i);
            edges.emplace_back(u, v);
            max_vertex = std::max({max_vertex, u, v});
        }
        pos = eol + 1;
    }
    if (max_vertex < 0) throw parse_error("edge list contains no edges", 0);
    return Graph(max_vertex + 1, std::move(edges));
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edgelist(text);
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

inline Graph complete_graph(int n) {
    if (n < 1) throw domain_error("complete graph needs n >= 1");
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

/// K_{a,b}: vertices 0..a-1 against a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw domain_error("complete bipartite graph needs a, b >= 1");
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, std::move(edges));
}

inline Graph path_graph(int n) {
    if (n < 1) throw domain_error("path graph needs n >= 1");
    std::vector<Graph::Edge> edges;
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw domain_error("cycle graph needs n >= 3");
    std::vector<Graph::Edge> edges;
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

/// Two adjacent centers u = 0 and v = 1; u carries m leaves (2..m+1),
/// v carries n leaves (m+2..m+n+1).
inline Graph double_star(int m, int n) {
    if (m < 1 || n < 1) throw domain_error("double star needs m, n >= 1");
    std::vector<Graph::Edge> edges;
    edges.emplace_back(0, 1);
    for (int i = 0; i < m; ++i) edges.emplace_back(0, 2 + i);
    for (int i = 0; i < n; ++i) edges.emplace_back(1, m + 2 + i);
    return Graph(m + n + 2, std::move(edges));
}

/// Seeded Erdos-Renyi G(n, p) conditioned on connectivity by rejection.
///
/// The draw is fully pinned down: std::mt19937_64 seeded with `seed`,
/// one 53-bit uniform per pair (i, j), i < j, in lexicographic order;
/// the edge is present when that uniform is < p. Rejected attempts
/// redraw every pair, so output is bit-identical for a fixed
/// (n, p, seed) on any conforming platform.
inline Graph random_connected(int n, double p, std::uint64_t seed) {
    if (n < 1) throw domain_error("random graph needs n >= 1");
    if (!(p > 0.0) || p > 1.0) throw domain_error("edge probability must be in (0, 1]");
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    constexpr int kMaxAttempts = 100000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<Graph::Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (uniform() < p) edges.emplace_back(u, v);
        Graph g(n, std::move(edges));
        if (g.is_connected()) return g;
    }
    throw domain_error("no connected draw after " + std::to_string(kMaxAttempts) +
                       " attempts; p is too small for n");
}

// ---------------------------------------------------------------------------
// Combinatorial queries
// ---------------------------------------------------------------------------

/// BFS 2-coloring. Returns the two color classes (class of vertex 0
/// first, each sorted ascending), or nullopt when an odd cycle exists.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>>
bipartition(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = 1 - color[static_cast<std::size_t>(u)];
                    q.push(w);
                } else if (cw == color[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < n; ++v)
        (color[static_cast<std::size_t>(v)] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

/// Maximum degree and all vertices attaining it (ascending).
inline std::pair<int, std::vector<int>> max_degree_vertices(const Graph& g) {
    int delta = 0;
    for (int v = 0; v < g.order(); ++v) delta = std::max(delta, g.degree(v));
    std::vector<int> vertices;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == delta) vertices.push_back(v);
    return {delta, vertices};
}

} // namespace rdalpha
