#pragma once

#include <cstddef>
#include <vector>

#include "domino/graph.hpp"

namespace domino {

/// Degree statistics of a graph.
///
/// `degrees` is non-increasing (d_1 >= ... >= d_n, stored 0-based) and
/// `prefix[t]` is d_1 + ... + d_t, so prefix[0] = 0 and prefix[n] = 2m.
/// `end_vertices` counts degree-1 vertices; `penultimate` counts vertices
/// with a degree-1 neighbor. The two may overlap (both vertices of K2).
struct DegreeProfile {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::size_t> degrees;
    std::vector<std::size_t> prefix;
    std::size_t end_vertices = 0;
    std::size_t penultimate = 0;
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;

    /// d_i with the 1-based index used in degree-sequence formulas.
    std::size_t d(std::size_t i) const { return degrees.at(i - 1); }
    std::size_t sum_first(std::size_t t) const { return prefix.at(t); }
};

inline DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.n = g.order();
    p.m = g.size();

    std::vector<std::size_t> deg(p.n);
    for (Vertex v = 0; v < p.n; ++v) deg[v] = g.degree(v);

    // counting sort, descending
    std::vector<std::size_t> bucket(p.n + 1, 0);
    for (std::size_t d : deg) ++bucket[d];
    p.degrees.reserve(p.n);
    for (std::size_t d = p.n + 1; d-- > 0;)
        p.degrees.insert(p.degrees.end(), bucket[d], d);

    p.prefix.assign(p.n + 1, 0);
    for (std::size_t t = 0; t < p.n; ++t) p.prefix[t + 1] = p.prefix[t] + p.degrees[t];

    if (p.n > 0) {
        p.max_degree = p.degrees.front();
        p.min_degree = p.degrees.back();
    }

    VertexSet leaves(p.n);
    for (Vertex v = 0; v < p.n; ++v)
        if (deg[v] == 1) leaves.set(v);
    p.end_vertices = leaves.count();
    for (Vertex v = 0; v < p.n; ++v)
        if (g.neighbors(v).intersects(leaves)) ++p.penultimate;
    return p;
}

/// Vertices of degree one.
inline VertexSet end_vertex_set(const Graph& g) {
    VertexSet s(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) s.set(v);
    return s;
}

/// Vertices adjacent to a vertex of degree one.
inline VertexSet penultimate_vertex_set(const Graph& g) {
    const VertexSet leaves = end_vertex_set(g);
    VertexSet s(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.neighbors(v).intersects(leaves)) s.set(v);
    return s;
}

} // namespace domino
