#pragma once

#include <cstddef>
#include <vector>

#include <fmt/format.h>

#include "domino/error.hpp"
#include "domino/graph.hpp"

namespace domino {

/// Corona product G ⊙ H with its vertex labelling.
///
/// Vertices 0..|G|-1 are the G-vertices; copy H_i occupies the block
/// |G| + i*|H| .. |G| + (i+1)*|H| - 1 and vertex i of G is joined to all of it.
struct Corona {
    Graph graph;
    std::size_t base_order = 0;
    std::size_t copy_order = 0;
    /// owner[v] = the G-vertex whose copy contains v (itself for G-vertices).
    std::vector<Vertex> owner;

    bool is_base(Vertex v) const { return v < base_order; }
    Vertex copy_vertex(Vertex g_vertex, Vertex h_vertex) const {
        return base_order + g_vertex * copy_order + h_vertex;
    }
};

inline Corona corona(const Graph& g, const Graph& h) {
    if (g.order() == 0) throw ConstructionError("corona: the first factor must be nonempty");
    Corona c;
    c.base_order = g.order();
    c.copy_order = h.order();
    const std::size_t n = g.order() * (1 + h.order());
    Graph::Builder b(n);
    c.owner.resize(n);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    const auto h_edges = h.edges();
    for (Vertex i = 0; i < g.order(); ++i) {
        c.owner[i] = i;
        for (Vertex x = 0; x < h.order(); ++x) {
            const Vertex cx = c.copy_vertex(i, x);
            c.owner[cx] = i;
            b.add_edge(i, cx);
        }
        for (auto [x, y] : h_edges) b.add_edge(c.copy_vertex(i, x), c.copy_vertex(i, y));
    }
    c.graph = std::move(b).build();
    return c;
}

/// H_1 = H, H_t = K1 ⊙ H_{t-1}. Returns H_1..H_k; in H_t (t >= 2) vertex 0
/// is the newly added universal vertex.
inline std::vector<Graph> k1_corona_tower(const Graph& h, std::size_t k) {
    if (k < 2) throw ConstructionError(fmt::format("corona tower needs k >= 2, got {}", k));
    std::vector<Graph> tower{h};
    const Graph k1 = Graph::empty(1);
    for (std::size_t t = 2; t <= k; ++t) tower.push_back(corona(k1, tower.back()).graph);
    return tower;
}

} // namespace domino
