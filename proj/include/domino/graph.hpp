#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "domino/error.hpp"
#include "domino/vertex_set.hpp"

namespace domino {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one VertexSet per vertex. Instances are created
/// through Graph::Builder or the static factories, all of which validate
/// symmetry, absence of loops and the cached edge count.
class Graph {
public:
    class Builder {
    public:
        explicit Builder(std::size_t n) : rows_(n, VertexSet(n)) {}

        std::size_t order() const noexcept { return rows_.size(); }

        /// Adds uv. Returns false when the edge was already present.
        bool add_edge(Vertex u, Vertex v) {
            if (u >= rows_.size() || v >= rows_.size())
                throw ConstructionError(fmt::format("edge {}-{} out of range for order {}", u, v, rows_.size()));
            if (u == v) throw ConstructionError(fmt::format("self-loop at vertex {}", u));
            if (rows_[u].test(v)) return false;
            rows_[u].set(v);
            rows_[v].set(u);
            ++m_;
            return true;
        }

        bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }

        Graph build() && {
            Graph g;
            g.rows_ = std::move(rows_);
            g.m_ = m_;
            g.validate();
            return g;
        }

    private:
        std::vector<VertexSet> rows_;
        std::size_t m_ = 0;
    };

    Graph() = default;

    static Graph empty(std::size_t n) { return Builder(n).build(); }

    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges) {
        Builder b(n);
        for (auto [u, v] : edges) b.add_edge(u, v);
        return std::move(b).build();
    }

    /// Graph whose edges are selected by `mask` over the upper-triangle pairs
    /// in the order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),... (column-major,
    /// the graph6 bit order). Requires C(n,2) <= 64.
    static Graph from_upper_mask(std::size_t n, std::uint64_t mask) {
        Builder b(n);
        std::size_t bit = 0;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i, ++bit)
                if ((mask >> bit) & 1U) b.add_edge(i, j);
        return std::move(b).build();
    }

    static Graph complete(std::size_t n) {
        Builder b(n);
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i) b.add_edge(i, j);
        return std::move(b).build();
    }

    static Graph path(std::size_t n) {
        Builder b(n);
        for (Vertex i = 1; i < n; ++i) b.add_edge(i - 1, i);
        return std::move(b).build();
    }

    static Graph cycle(std::size_t n) {
        if (n < 3) throw ConstructionError(fmt::format("cycle needs at least 3 vertices, got {}", n));
        Builder b(n);
        for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
        return std::move(b).build();
    }

    /// Circulant graph: i ~ i±j (mod n) for every jump j. A jump of n/2 (n
    /// even) contributes one neighbor.
    static Graph circulant(std::size_t n, const std::vector<std::size_t>& jumps) {
        Builder b(n);
        for (std::size_t j : jumps) {
            if (j == 0 || j > n / 2)
                throw ConstructionError(fmt::format("circulant jump {} invalid for order {}", j, n));
            for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + j) % n);
        }
        return std::move(b).build();
    }

    std::size_t order() const noexcept { return rows_.size(); }
    std::size_t size() const noexcept { return m_; }

    const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
    VertexSet closed_neighborhood(Vertex v) const {
        VertexSet s = rows_[v];
        s.set(v);
        return s;
    }
    bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
    std::size_t degree(Vertex v) const { return rows_[v].count(); }

    std::size_t min_degree() const {
        std::size_t d = order() == 0 ? 0 : order();
        for (Vertex v = 0; v < order(); ++v) d = std::min(d, degree(v));
        return d;
    }
    std::size_t max_degree() const {
        std::size_t d = 0;
        for (Vertex v = 0; v < order(); ++v) d = std::max(d, degree(v));
        return d;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u = 0; u < order(); ++u)
            rows_[u].for_each([&](Vertex v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    /// Closed neighborhoods as 64-bit masks; requires order() <= 64.
    std::vector<std::uint64_t> closed_masks() const {
        assert(order() <= 64);
        std::vector<std::uint64_t> out(order());
        for (Vertex v = 0; v < order(); ++v) out[v] = rows_[v].mask() | (std::uint64_t{1} << v);
        return out;
    }

    Graph induced(const VertexSet& keep) const {
        const auto verts = keep.to_vector();
        std::vector<std::size_t> index(order(), order());
        for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
        Builder b(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i)
            rows_[verts[i]].for_each([&](Vertex w) {
                if (index[w] != order() && i < index[w]) b.add_edge(i, index[w]);
            });
        return std::move(b).build();
    }

    bool is_regular() const {
        return order() == 0 || min_degree() == max_degree();
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

    /// Checks symmetry, loop-freeness and the cached edge count; throws
    /// ConstructionError on violation.
    void validate() const {
        std::size_t degree_sum = 0;
        for (Vertex v = 0; v < order(); ++v) {
            if (rows_[v].size() != order())
                throw ConstructionError(fmt::format("row {} has universe {} != {}", v, rows_[v].size(), order()));
            if (rows_[v].test(v)) throw ConstructionError(fmt::format("self-loop at vertex {}", v));
            rows_[v].for_each([&](Vertex u) {
                if (!rows_[u].test(v)) throw ConstructionError(fmt::format("asymmetric adjacency {}-{}", v, u));
            });
            degree_sum += rows_[v].count();
        }
        if (degree_sum != 2 * m_)
            throw ConstructionError(fmt::format("edge count {} disagrees with degree sum {}", m_, degree_sum));
    }

private:
    std::vector<VertexSet> rows_;
    std::size_t m_ = 0;
};

} // namespace domino
