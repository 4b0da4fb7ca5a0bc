#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <fmt/format.h>

#include "domino/domatic.hpp"
#include "domino/error.hpp"
#include "domino/graph.hpp"

namespace domino {

/// r disjoint (k-1)-regular graphs H_1..H_r of order q, with every vertex
/// joined to exactly k vertices of each other H_j. The result is
/// (kr-1)-regular and attains the domatic upper bound with d×k = r and
/// γ×k = q.
struct PsiGraph {
    Graph graph;
    std::vector<VertexSet> parts;  ///< H_i occupies vertices i*q .. i*q+q-1
};

/// Jumps of a (k-1)-regular circulant on q vertices. seed 0 takes the jumps
/// 1, 2, ...; other seeds draw them at random.
inline std::vector<std::size_t> regular_circulant_jumps(std::size_t q, std::size_t degree, std::uint64_t seed) {
    std::vector<std::size_t> jumps;
    const bool odd = degree % 2 == 1;
    const std::size_t pairs = degree / 2;
    std::vector<std::size_t> pool;
    for (std::size_t j = 1; 2 * j < q; ++j) pool.push_back(j);
    if (pool.size() < pairs) throw ConstructionError(fmt::format("no {}-regular circulant on {} vertices", degree, q));
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(pool.begin(), pool.end(), rng);
    }
    jumps.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(pairs));
    if (odd) jumps.push_back(q / 2);
    std::sort(jumps.begin(), jumps.end());
    return jumps;
}

inline PsiGraph build_psi(std::size_t k, std::size_t r, std::size_t q, std::uint64_t seed = 0) {
    if (k < 1 || r < 1) throw ConstructionError("Ψ needs k >= 1 and r >= 1");
    if (q < k) throw ConstructionError(fmt::format("Ψ needs part order q >= k (q={}, k={})", q, k));
    if ((q * (k - 1)) % 2 != 0)
        throw ConstructionError(fmt::format("no {}-regular graph on {} vertices: q(k-1) must be even", k - 1, q));

    const Graph part = k == 1 ? Graph::empty(q) : Graph::circulant(q, regular_circulant_jumps(q, k - 1, seed));
    Graph::Builder b(r * q);
    PsiGraph out;
    for (std::size_t i = 0; i < r; ++i) {
        VertexSet members(r * q);
        for (std::size_t x = 0; x < q; ++x) members.set(i * q + x);
        out.parts.push_back(members);
        for (auto [x, y] : part.edges()) b.add_edge(i * q + x, i * q + y);
    }
    // circulant k-regular bipartite join: x in H_i ~ x, x+1, ..., x+k-1 in H_j
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            for (std::size_t x = 0; x < q; ++x)
                for (std::size_t s = 0; s < k; ++s) b.add_edge(i * q + x, j * q + (x + s) % q);
    out.graph = std::move(b).build();
    return out;
}

/// Graphs H_1..H_r where H_host has an isolated vertex v; v is joined to one
/// vertex of every other part and further edges avoiding v are added so that
/// every vertex has a neighbor in every other part. Members are exactly the
/// graphs with d(G) = δ(G) + 1.
struct ThetaParams {
    std::vector<Graph> parts;
    std::size_t host = 0;
    Vertex v = 0;                     ///< local index in parts[host]
    std::vector<Vertex> links;        ///< links[j]: local vertex of part j joined to v (entry for host ignored)
    std::vector<Edge> extra_edges;    ///< global indices (parts laid out consecutively)
};

struct ThetaGraph {
    Graph graph;
    std::vector<VertexSet> parts;
    Vertex v = 0;  ///< global index
};

inline ThetaGraph build_theta(const ThetaParams& p) {
    const std::size_t r = p.parts.size();
    if (p.host >= r) throw ConstructionError(fmt::format("host part {} out of range ({} parts)", p.host, r));
    if (p.links.size() != r)
        throw ConstructionError(fmt::format("links must have one entry per part ({}), got {}", r, p.links.size()));
    std::vector<std::size_t> offset(r + 1, 0);
    for (std::size_t j = 0; j < r; ++j) {
        if (p.parts[j].order() == 0) throw ConstructionError(fmt::format("part {} is empty", j));
        offset[j + 1] = offset[j] + p.parts[j].order();
    }
    const Graph& host = p.parts[p.host];
    if (p.v >= host.order() || host.degree(p.v) != 0)
        throw ConstructionError(fmt::format("vertex {} is not an isolated vertex of part {}", p.v, p.host));
    const Vertex v = offset[p.host] + p.v;

    Graph::Builder b(offset[r]);
    ThetaGraph out;
    out.v = v;
    for (std::size_t j = 0; j < r; ++j) {
        VertexSet members(offset[r]);
        for (Vertex x = 0; x < p.parts[j].order(); ++x) members.set(offset[j] + x);
        out.parts.push_back(members);
        for (auto [x, y] : p.parts[j].edges()) b.add_edge(offset[j] + x, offset[j] + y);
    }
    for (std::size_t j = 0; j < r; ++j) {
        if (j == p.host) continue;
        if (p.links[j] >= p.parts[j].order())
            throw ConstructionError(fmt::format("link {} out of range for part {}", p.links[j], j));
        b.add_edge(v, offset[j] + p.links[j]);
    }
    for (auto [x, y] : p.extra_edges) {
        if (x == v || y == v) throw ConstructionError(fmt::format("extra edge {}-{} touches the isolated vertex", x, y));
        if (x >= offset[r] || y >= offset[r] || x == y)
            throw ConstructionError(fmt::format("extra edge {}-{} is out of range or a loop", x, y));
        if (!b.add_edge(x, y)) throw ConstructionError(fmt::format("extra edge {}-{} already present", x, y));
    }
    out.graph = std::move(b).build();
    for (std::size_t t = 0; t < r; ++t)
        for (Vertex x = offset[t]; x < offset[t + 1]; ++x)
            for (std::size_t u = 0; u < r; ++u)
                if (u != t && !out.graph.neighbors(x).intersects(out.parts[u]))
                    throw ConstructionError(fmt::format("vertex {} of part {} has no neighbor in part {}", x, t, u));
    return out;
}

/// Partition certifying fullness: r = δ+1 parts, each dominating, with a
/// minimum-degree vertex v alone among its own part's neighbors and having
/// exactly one neighbor in each other part.
struct ThetaWitness {
    std::vector<VertexSet> parts;
    Vertex v = 0;
    std::size_t host = 0;
};

/// Searches for the Θ structure directly (v's neighbors seed parts 1..δ);
/// n <= 12.
inline std::optional<ThetaWitness> full_structure_witness(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) throw UndefinedParameter("fullness of the empty graph");
    if (n > domatic_max_order)
        throw CapExceeded(fmt::format("fullness witness search supports n <= {}, got {}", domatic_max_order, n));
    const std::size_t delta = g.min_degree();
    const std::size_t r = delta + 1;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != delta) continue;
        detail::PartitionSearch search(g, 1, r);
        search.symmetric_parts = false;
        bool ok = search.fix(v, 0);
        std::size_t j = 1;
        g.neighbors(v).for_each([&](Vertex u) { ok = search.fix(u, j++) && ok; });
        if (!ok || !search.run()) continue;
        ThetaWitness w{search.parts(), v, 0};
        if (!is_ktuple_domatic_partition(g, w.parts, 1)) throw Error("Θ witness search produced an invalid partition");
        return w;
    }
    return std::nullopt;
}

/// For an r-regular graph: parts of the partition pairwise induce perfect
/// matchings (and no edges inside a part).
inline bool is_perfect_matching_partition(const Graph& g, const std::vector<VertexSet>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        bool ok = true;
        parts[i].for_each([&](Vertex x) {
            if (g.neighbors(x).intersects(parts[i])) ok = false;
            for (std::size_t j = 0; j < parts.size(); ++j)
                if (j != i && g.neighbors(x).intersection_count(parts[j]) != 1) ok = false;
        });
        if (!ok) return false;
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (parts[i].count() != parts[j].count()) return false;
    }
    return true;
}

} // namespace domino
