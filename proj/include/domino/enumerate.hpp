#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include <fmt/format.h>

#include "domino/error.hpp"
#include "domino/graph.hpp"

namespace domino {

inline constexpr std::size_t max_enumeration_order = 8;

struct GraphFilter {
    bool connected = false;
    std::size_t min_degree = 0;
    bool trees_only = false;
};

/// Number of vertex pairs, i.e. the width of the edge mask for order n.
constexpr std::size_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

namespace detail {

inline void check_enumeration_order(std::size_t n) {
    if (n < 1 || n > max_enumeration_order)
        throw CapExceeded(fmt::format("exhaustive enumeration supports 1 <= n <= {}, got {}", max_enumeration_order, n));
}

// Cheap filter on the raw edge mask so rejected graphs are never built.
inline bool mask_passes(std::size_t n, std::uint64_t mask, const GraphFilter& f) {
    std::array<std::uint32_t, 16> adj{};
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1U) {
                adj[i] |= 1U << j;
                adj[j] |= 1U << i;
            }
    for (std::size_t v = 0; v < n; ++v)
        if (static_cast<std::size_t>(std::popcount(adj[v])) < f.min_degree) return false;
    if (f.connected || f.trees_only) {
        std::uint32_t seen = 1;
        std::uint32_t frontier = 1;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t w = frontier; w; w &= w - 1) next |= adj[std::countr_zero(w)];
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen != (n == 32 ? ~0U : (1U << n) - 1)) return false;
    }
    if (f.trees_only && static_cast<std::size_t>(std::popcount(mask)) + 1 != n) return false;
    return true;
}

} // namespace detail

/// Labeled tree with the given Prüfer sequence (entries in 0..n-1, length
/// n-2).
inline Graph prufer_decode(const std::vector<Vertex>& seq) {
    const std::size_t n = seq.size() + 2;
    std::vector<std::size_t> remaining(n, 1);
    for (Vertex v : seq) {
        if (v >= n) throw ConstructionError(fmt::format("Prüfer entry {} out of range for n={}", v, n));
        ++remaining[v];
    }
    Graph::Builder b(n);
    for (Vertex v : seq) {
        Vertex leaf = 0;
        while (remaining[leaf] != 1) ++leaf;
        b.add_edge(leaf, v);
        --remaining[leaf];
        --remaining[v];
    }
    Vertex u = n;
    for (Vertex w = 0; w < n; ++w) {
        if (remaining[w] == 1) {
            if (u == n) {
                u = w;
            } else {
                b.add_edge(u, w);
                break;
            }
        }
    }
    return std::move(b).build();
}

/// Number of objects enumerate_graphs visits before filtering: 2^C(n,2) edge
/// masks, or n^(n-2) Prüfer sequences when trees_only.
inline std::uint64_t universe_size(std::size_t n, const GraphFilter& f) {
    detail::check_enumeration_order(n);
    if (f.trees_only) {
        if (n <= 2) return 1;
        std::uint64_t c = 1;
        for (std::size_t i = 0; i + 2 < n; ++i) c *= n;
        return c;
    }
    return std::uint64_t{1} << pair_count(n);
}

/// Visits every labeled graph of order n with universe index in [lo, hi)
/// that passes the filter. Indices are edge masks (see
/// Graph::from_upper_mask) or, for trees_only, Prüfer sequences read as
/// base-n numbers. Splitting [0, universe_size) into ranges shards the work.
template <class Fn>
void enumerate_graphs_range(std::size_t n, const GraphFilter& f, std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
    detail::check_enumeration_order(n);
    hi = std::min(hi, universe_size(n, f));
    if (f.trees_only) {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (n == 1) {
                fn(Graph::empty(1));
                continue;
            }
            std::vector<Vertex> seq(n - 2);
            std::uint64_t x = idx;
            for (std::size_t i = seq.size(); i-- > 0;) {
                seq[i] = static_cast<Vertex>(x % n);
                x /= n;
            }
            Graph t = prufer_decode(seq);
            if (t.min_degree() >= f.min_degree) fn(t);
        }
        return;
    }
    for (std::uint64_t mask = lo; mask < hi; ++mask)
        if (detail::mask_passes(n, mask, f)) fn(Graph::from_upper_mask(n, mask));
}

template <class Fn>
void enumerate_graphs(std::size_t n, const GraphFilter& f, Fn&& fn) {
    enumerate_graphs_range(n, f, 0, universe_size(n, f), fn);
}

/// Visits every labeled r-regular graph on n vertices (any n the caller can
/// afford; no order cap).
template <class Fn>
void enumerate_regular_graphs(std::size_t n, std::size_t r, Fn&& fn) {
    if (r >= n && !(n == 1 && r == 0)) return;
    if ((n * r) % 2 != 0) return;
    std::vector<std::size_t> deg(n, 0);
    std::vector<Edge> edges;

    // Vertex i picks its remaining neighbors among j > i, in increasing order.
    auto rec = [&](auto&& self, Vertex i, Vertex from) -> void {
        if (i == n) {
            fn(Graph::from_edges(n, edges));
            return;
        }
        if (deg[i] == r) {
            self(self, i + 1, i + 2);
            return;
        }
        const std::size_t need = r - deg[i];
        std::size_t available = 0;
        for (Vertex j = from; j < n; ++j)
            if (deg[j] < r) ++available;
        if (available < need) return;
        for (Vertex j = from; j < n; ++j) {
            if (deg[j] >= r) continue;
            ++deg[i];
            ++deg[j];
            edges.emplace_back(i, j);
            self(self, i, j + 1);
            edges.pop_back();
            --deg[i];
            --deg[j];
        }
    };
    rec(rec, 0, 1);
}

/// Isomorphism-invariant key: the smallest edge mask over all relabellings.
/// Intended only for deduplicating counts at n <= 8.
inline std::uint64_t canonical_key(const Graph& g) {
    const std::size_t n = g.order();
    detail::check_enumeration_order(n);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t mask = 0;
        std::size_t bit = 0;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i, ++bit)
                if (g.adjacent(perm[i], perm[j])) mask |= std::uint64_t{1} << bit;
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace domino
