#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "domino/degree.hpp"
#include "domino/error.hpp"
#include "domino/graph.hpp"
#include "domino/traversal.hpp"

namespace domino {

inline constexpr std::size_t omega_recognition_max_order = 16;

/// Parameters of a graph attaining γ×2 = (4n - 2m + e - p)/3.
///
/// Start from a bipartite graph with sides X and Y where every X-vertex has
/// exactly two Y-neighbors, add a matching on Y, and hang at least one
/// end-vertex on every Y-vertex the matching leaves unsaturated.
struct OmegaParams {
    std::size_t y_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> matching;  ///< Y-index pairs
    std::vector<std::size_t> end_vertices;                      ///< per Y-vertex
    std::vector<std::pair<std::size_t, std::size_t>> x_neighbors;  ///< per X-vertex
};

/// Vertex layout: Y-vertices 0..|Y|-1, then X-vertices, then end-vertices
/// grouped by their Y-vertex.
struct OmegaGraph {
    Graph graph;
    VertexSet witness;  ///< double dominating set of size (4n - 2m + e - p)/3
};

/// Throws ConstructionError naming the first violated rule.
inline void validate(const OmegaParams& p) {
    if (p.end_vertices.size() != p.y_count)
        throw ConstructionError(
            fmt::format("end_vertices has {} entries but there are {} Y-vertices", p.end_vertices.size(), p.y_count));
    std::vector<bool> saturated(p.y_count, false);
    for (auto [a, b] : p.matching) {
        if (a >= p.y_count || b >= p.y_count || a == b)
            throw ConstructionError(fmt::format("matching: pair ({},{}) is not two distinct Y-vertices", a, b));
        if (saturated[a] || saturated[b])
            throw ConstructionError(fmt::format("matching: pair ({},{}) reuses a saturated vertex", a, b));
        saturated[a] = saturated[b] = true;
    }
    std::vector<std::size_t> x_degree(p.y_count, 0);
    for (std::size_t i = 0; i < p.x_neighbors.size(); ++i) {
        auto [a, b] = p.x_neighbors[i];
        if (a >= p.y_count || b >= p.y_count || a == b)
            throw ConstructionError(fmt::format("x_neighbors: X-vertex {} must name two distinct Y-vertices", i));
        ++x_degree[a];
        ++x_degree[b];
    }
    for (std::size_t y = 0; y < p.y_count; ++y) {
        if (saturated[y] && p.end_vertices[y] != 0)
            throw ConstructionError(fmt::format("end_vertices: matched Y-vertex {} cannot carry end-vertices", y));
        if (!saturated[y] && p.end_vertices[y] == 0)
            throw ConstructionError(fmt::format("end_vertices: unmatched Y-vertex {} needs at least one end-vertex", y));
        if (saturated[y] && x_degree[y] == 0)
            throw ConstructionError(fmt::format("x_neighbors: matched Y-vertex {} has no X-neighbor", y));
    }
}

inline OmegaGraph build_omega(const OmegaParams& p) {
    validate(p);
    std::size_t ends = 0;
    for (std::size_t c : p.end_vertices) ends += c;
    const std::size_t x0 = p.y_count;
    const std::size_t e0 = x0 + p.x_neighbors.size();
    Graph::Builder b(e0 + ends);
    for (auto [u, v] : p.matching) b.add_edge(u, v);
    for (std::size_t i = 0; i < p.x_neighbors.size(); ++i) {
        b.add_edge(x0 + i, p.x_neighbors[i].first);
        b.add_edge(x0 + i, p.x_neighbors[i].second);
    }
    Vertex next = e0;
    for (std::size_t y = 0; y < p.y_count; ++y)
        for (std::size_t c = 0; c < p.end_vertices[y]; ++c) b.add_edge(y, next++);

    OmegaGraph out;
    out.graph = std::move(b).build();
    out.witness = VertexSet(out.graph.order());
    for (Vertex y = 0; y < p.y_count; ++y) out.witness.set(y);
    for (Vertex v = e0; v < out.graph.order(); ++v) out.witness.set(v);
    return out;
}

/// Structure certifying membership: `dominating` induces disjoint P2-copies
/// (the matching) and stars whose centers are the penultimate vertices and
/// whose leaves are the end-vertices; every other vertex is independent of
/// the rest of V∖A and has exactly two neighbors in A.
struct OmegaWitness {
    VertexSet dominating;
    VertexSet independent;
    std::vector<Edge> matching;
};

namespace detail {

inline bool omega_structure_holds(const Graph& g, const VertexSet& a, const VertexSet& leaves, const VertexSet& supports) {
    for (Vertex v = 0; v < g.order(); ++v) {
        const VertexSet& nv = g.neighbors(v);
        if (!a.test(v)) {
            if (nv.intersection_count(a) != 2) return false;
            if (nv.count() != 2) return false;  // no neighbors outside A
            continue;
        }
        const VertexSet in_a = nv & a;
        if (supports.test(v)) {
            if (!in_a.is_subset_of(leaves)) return false;
        } else if (leaves.test(v)) {
            // its unique neighbor is a support vertex
        } else {
            if (in_a.count() != 1) return false;
            const Vertex partner = in_a.first();
            if (leaves.test(partner) || supports.test(partner)) return false;
        }
    }
    return true;
}

} // namespace detail

/// Searches for A ⊇ (end-vertices ∪ penultimate vertices) realising the
/// structure above; n <= 16 and δ >= 1.
inline std::optional<OmegaWitness> recognize_omega(const Graph& g) {
    const std::size_t n = g.order();
    if (n > omega_recognition_max_order)
        throw CapExceeded(fmt::format("Ω recognition supports n <= {}, got {}", omega_recognition_max_order, n));
    if (n == 0 || g.min_degree() == 0) throw UndefinedParameter("Ω recognition needs a graph without isolated vertices");

    const VertexSet leaves = end_vertex_set(g);
    const VertexSet supports = penultimate_vertex_set(g);
    const VertexSet forced = leaves | supports;
    const std::vector<Vertex> free = forced.complement().to_vector();

    // Counting edges of the structure gives 3|A| = 4n - 2m + e - p.
    const auto target = 4 * static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(g.size()) +
                        static_cast<std::int64_t>(leaves.count()) - static_cast<std::int64_t>(supports.count());
    if (target % 3 != 0 || target / 3 < static_cast<std::int64_t>(forced.count())) return std::nullopt;
    const auto extra = static_cast<std::size_t>(target / 3) - forced.count();
    if (extra > free.size()) return std::nullopt;

    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << free.size()); ++pick) {
        if (static_cast<std::size_t>(std::popcount(pick)) != extra) continue;
        VertexSet a = forced;
        for (std::size_t i = 0; i < free.size(); ++i)
            if ((pick >> i) & 1U) a.set(free[i]);
        if (!detail::omega_structure_holds(g, a, leaves, supports)) continue;
        OmegaWitness w{a, a.complement(), {}};
        (a - forced).for_each([&](Vertex v) {
            const Vertex partner = (g.neighbors(v) & a).first();
            if (v < partner) w.matching.emplace_back(v, partner);
        });
        return w;
    }
    return std::nullopt;
}

/// Tree members of the family. `pair_copies` copies of P2 and one star per
/// entry of `star_leaves` are joined by a + s - 1 connector vertices, each
/// adjacent to two anchors. Anchors are numbered: 2i and 2i+1 for the
/// vertices of copy i, then 2a + j for the center of star j.
struct OmegaTreeParams {
    std::size_t pair_copies = 0;
    std::vector<std::size_t> star_leaves;
    std::vector<std::pair<std::size_t, std::size_t>> connectors;
};

/// Layout: P2 vertices 0..2a-1, star centers, star leaves, connectors.
inline Graph build_omega_tree(const OmegaTreeParams& p) {
    const std::size_t a = p.pair_copies;
    const std::size_t s = p.star_leaves.size();
    if (a + s == 0) throw ConstructionError("Ω tree needs at least one P2-copy or star");
    if (p.connectors.size() + 1 != a + s)
        throw ConstructionError(
            fmt::format("Ω tree needs a + s - 1 = {} connectors, got {}", a + s - 1, p.connectors.size()));
    const std::size_t anchors = 2 * a + s;
    std::vector<bool> copy_touched(a, false);
    for (std::size_t i = 0; i < p.connectors.size(); ++i) {
        auto [x, y] = p.connectors[i];
        if (x >= anchors || y >= anchors || x == y)
            throw ConstructionError(fmt::format("connector {} must join two distinct anchors below {}", i, anchors));
        if (x < 2 * a) copy_touched[x / 2] = true;
        if (y < 2 * a) copy_touched[y / 2] = true;
    }
    for (std::size_t c = 0; c < a; ++c)
        if (!copy_touched[c]) throw ConstructionError(fmt::format("P2-copy {} is not incident with any connector", c));

    std::size_t leaves = 0;
    for (std::size_t j = 0; j < s; ++j) {
        if (p.star_leaves[j] == 0) throw ConstructionError(fmt::format("star {} needs at least one leaf", j));
        leaves += p.star_leaves[j];
    }
    const std::size_t leaf0 = anchors;
    const std::size_t conn0 = leaf0 + leaves;
    Graph::Builder b(conn0 + p.connectors.size());
    for (std::size_t c = 0; c < a; ++c) b.add_edge(2 * c, 2 * c + 1);
    Vertex next = leaf0;
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t l = 0; l < p.star_leaves[j]; ++l) b.add_edge(2 * a + j, next++);
    for (std::size_t i = 0; i < p.connectors.size(); ++i) {
        b.add_edge(conn0 + i, p.connectors[i].first);
        b.add_edge(conn0 + i, p.connectors[i].second);
    }
    Graph t = std::move(b).build();
    if (!is_tree(t)) throw ConstructionError("connectors create a cycle or leave the graph disconnected");
    return t;
}

} // namespace domino
