#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "domino/graph.hpp"

namespace domino {

/// Breadth-first distances from `source`; unreachable vertices get
/// std::nullopt.
inline std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source) {
    std::vector<std::optional<std::size_t>> dist(g.order());
    std::vector<Vertex> frontier{source};
    dist[source] = 0;
    for (std::size_t level = 1; !frontier.empty(); ++level) {
        std::vector<Vertex> next;
        for (Vertex u : frontier)
            g.neighbors(u).for_each([&](Vertex w) {
                if (!dist[w]) {
                    dist[w] = level;
                    next.push_back(w);
                }
            });
        frontier = std::move(next);
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    const auto dist = bfs_distances(g, 0);
    for (const auto& d : dist)
        if (!d) return false;
    return true;
}

/// Maximum eccentricity; std::nullopt when disconnected. The empty graph and
/// K1 have diameter 0.
inline std::optional<std::size_t> diameter(const Graph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto dist = bfs_distances(g, v);
        for (const auto& d : dist) {
            if (!d) return std::nullopt;
            best = std::max(best, *d);
        }
    }
    return best;
}

inline bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

} // namespace domino
