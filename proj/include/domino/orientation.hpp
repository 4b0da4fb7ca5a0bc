#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "domino/corona.hpp"
#include "domino/error.hpp"
#include "domino/graph.hpp"

namespace domino {

using Arc = std::pair<Vertex, Vertex>;

/// One ordered pair per edge of the underlying graph.
struct Orientation {
    std::vector<Arc> arcs;
};

/// Two arcs (x,y),(y,z) whose shortcut (x,z) is missing.
struct TransitivityViolation {
    Arc first;
    Arc second;
};

/// Throws ConstructionError unless `d` orients every edge of `g` exactly once.
inline void check_orientation(const Graph& g, const Orientation& d) {
    Graph::Builder seen(g.order());
    for (auto [u, v] : d.arcs) {
        if (u >= g.order() || v >= g.order() || !g.adjacent(u, v))
            throw ConstructionError(fmt::format("arc ({},{}) is not an edge of the graph", u, v));
        if (!seen.add_edge(u, v)) throw ConstructionError(fmt::format("edge {}-{} is oriented twice", u, v));
    }
    if (d.arcs.size() != g.size())
        throw ConstructionError(fmt::format("orientation has {} arcs but the graph has {} edges", d.arcs.size(), g.size()));
}

inline std::optional<TransitivityViolation> find_transitivity_violation(std::size_t n, const Orientation& d) {
    std::vector<VertexSet> out(n, VertexSet(n));
    for (auto [u, v] : d.arcs) out[u].set(v);
    for (Vertex x = 0; x < n; ++x) {
        std::optional<TransitivityViolation> bad;
        out[x].for_each([&](Vertex y) {
            if (bad) return;
            const VertexSet missing = out[y] - out[x];
            if (missing.any()) bad = TransitivityViolation{{x, y}, {y, missing.first()}};
        });
        if (bad) return bad;
    }
    return std::nullopt;
}

inline bool is_transitive_orientation(const Graph& g, const Orientation& d) {
    check_orientation(g, d);
    return !find_transitivity_violation(g.order(), d);
}

struct ExtendedOrientation {
    Graph graph;       ///< K1 ⊙ H, new vertex 0, H-vertex v relabelled v+1
    Orientation arcs;  ///< D shifted by one plus (0, v+1) for every v
};

/// Lifts a transitive orientation of H to K1 ⊙ H by orienting every new edge
/// away from the added vertex.
inline ExtendedOrientation extend_transitive_orientation(const Graph& h, const Orientation& d) {
    check_orientation(h, d);
    if (auto bad = find_transitivity_violation(h.order(), d))
        throw ConstructionError(fmt::format("orientation is not transitive: arcs ({},{}) and ({},{}) lack ({},{})",
                                            bad->first.first, bad->first.second, bad->second.first, bad->second.second,
                                            bad->first.first, bad->second.second));
    ExtendedOrientation ext;
    ext.graph = corona(Graph::empty(1), h).graph;
    for (auto [u, v] : d.arcs) ext.arcs.arcs.emplace_back(u + 1, v + 1);
    for (Vertex v = 0; v < h.order(); ++v) ext.arcs.arcs.emplace_back(0, v + 1);
    if (!is_transitive_orientation(ext.graph, ext.arcs))
        throw Error("extended orientation failed its transitivity check");
    return ext;
}

} // namespace domino
