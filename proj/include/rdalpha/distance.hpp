#pragma once

#include <vector>

#include "rdalpha/errors.hpp"
#include "rdalpha/graph.hpp"

namespace rdalpha {

/// All-pairs hop distances of a connected graph. Immutable.
class DistanceMatrix {
public:
    DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}

    int order() const noexcept { return n_; }

    int operator()(int i, int j) const {
        return d_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
    }

private:
    int n_;
    std::vector<int> d_; // row-major n*n
};

/// BFS from every vertex; O(n*(n+m)). Throws connectivity_error naming
/// an unreachable pair when the graph is disconnected.
inline DistanceMatrix apsp(const Graph& g) {
    const int n = g.order();
    std::vector<int> d(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    std::vector<int> frontier, next;
    for (int s = 0; s < n; ++s) {
        int* row = d.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n);
        row[s] = 0;
        frontier.assign(1, s);
        int depth = 0;
        while (!frontier.empty()) {
            ++depth;
            next.clear();
            for (int u : frontier)
                for (int w : g.neighbors(u))
                    if (row[w] < 0) {
                        row[w] = depth;
                        next.push_back(w);
                    }
            frontier.swap(next);
        }
        for (int t = 0; t < n; ++t)
            if (row[t] < 0) throw connectivity_error(s, t);
    }
    return DistanceMatrix(n, std::move(d));
}

inline int diameter(const DistanceMatrix& d) {
    int best = 0;
    for (int i = 0; i < d.order(); ++i)
        for (int j = 0; j < d.order(); ++j) best = std::max(best, d(i, j));
    return best;
}

} // namespace rdalpha
