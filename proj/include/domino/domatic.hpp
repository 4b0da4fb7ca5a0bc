#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <fmt/format.h>

#include "domino/error.hpp"
#include "domino/graph.hpp"
#include "domino/ktuple.hpp"

namespace domino {

inline constexpr std::size_t domatic_max_order = 12;

/// A partition of V(G) into k-tuple dominating sets.
struct DomaticResult {
    std::size_t k = 0;
    std::vector<VertexSet> parts;
    std::size_t value = 0;
};

/// True iff `parts` partition V(G) and each part is k-tuple dominating.
inline bool is_ktuple_domatic_partition(const Graph& g, const std::vector<VertexSet>& parts, std::size_t k) {
    VertexSet seen(g.order());
    for (const auto& p : parts) {
        if (p.size() != g.order() || p.empty() || p.intersects(seen)) return false;
        seen |= p;
        if (!is_ktuple_dominating(g, p, k)) return false;
    }
    return seen.count() == g.order();
}

namespace detail {

// Backtracking assignment of vertices 0..n-1 to exactly r parts. Vertex 0
// goes to part 0 and a vertex may open at most the next unused part.
class PartitionSearch {
public:
    PartitionSearch(const Graph& g, std::size_t k, std::size_t r)
        : n_(g.order()), k_(k), r_(r), closed_(g.closed_masks()), part_of_(n_, r),
          count_(n_ * r, 0), unassigned_(n_, 0) {
        for (Vertex v = 0; v < n_; ++v) unassigned_[v] = static_cast<std::size_t>(std::popcount(closed_[v]));
    }

    /// Pre-assigns v to part j; returns false if that is already infeasible.
    bool fix(Vertex v, std::size_t j) { return assign(v, j); }

    bool run() { return rec(0, used_parts()); }

    std::vector<VertexSet> parts() const {
        std::vector<VertexSet> out(r_, VertexSet(n_));
        for (Vertex v = 0; v < n_; ++v) out[part_of_[v]].set(v);
        return out;
    }

    bool symmetric_parts = true;

private:
    std::size_t used_parts() const {
        std::size_t used = 0;
        for (Vertex v = 0; v < n_; ++v)
            if (part_of_[v] < r_) used = std::max(used, part_of_[v] + 1);
        return used;
    }

    bool assign(Vertex v, std::size_t j) {
        part_of_[v] = j;
        bool ok = true;
        for (std::uint64_t w = closed_[v]; w; w &= w - 1) {
            const auto x = static_cast<std::size_t>(std::countr_zero(w));
            ++count_[x * r_ + j];
            --unassigned_[x];
            for (std::size_t p = 0; p < r_ && ok; ++p)
                if (count_[x * r_ + p] + unassigned_[x] < k_) ok = false;
        }
        return ok;
    }

    void unassign(Vertex v) {
        const std::size_t j = part_of_[v];
        for (std::uint64_t w = closed_[v]; w; w &= w - 1) {
            const auto x = static_cast<std::size_t>(std::countr_zero(w));
            --count_[x * r_ + j];
            ++unassigned_[x];
        }
        part_of_[v] = r_;
    }

    bool rec(Vertex v, std::size_t used) {
        while (v < n_ && part_of_[v] < r_) ++v;
        if (v == n_) return used == r_;
        std::size_t free_left = 0;
        for (Vertex u = v; u < n_; ++u)
            if (part_of_[u] == r_) ++free_left;
        if (r_ - used > free_left) return false;
        const std::size_t limit = symmetric_parts ? std::min(r_, used + 1) : r_;
        for (std::size_t j = 0; j < limit; ++j) {
            const bool ok = assign(v, j);
            if (ok && rec(v + 1, std::max(used, j + 1))) return true;
            unassign(v);
        }
        return false;
    }

    std::size_t n_;
    std::size_t k_;
    std::size_t r_;
    std::vector<std::uint64_t> closed_;
    std::vector<std::size_t> part_of_;
    std::vector<std::size_t> count_;
    std::vector<std::size_t> unassigned_;
};

} // namespace detail

/// Maximum k-tuple domatic partition, by trying part counts from the largest
/// feasible value downward. n <= 12.
inline DomaticResult domatic_ktuple_exact(const Graph& g, std::size_t k) {
    detail::require_ktuple_domain(g, k);
    const std::size_t n = g.order();
    if (n == 0) throw UndefinedParameter("domatic number of the empty graph");
    if (n > domatic_max_order)
        throw CapExceeded(fmt::format("exact domatic solver supports n <= {}, got {}", domatic_max_order, n));

    // Each part meets every N[v] in k vertices, so r*k <= δ+1.
    const std::size_t r_max = std::min((g.min_degree() + 1) / k, n / k);
    for (std::size_t r = r_max; r >= 1; --r) {
        detail::PartitionSearch search(g, k, r);
        if (search.run()) {
            DomaticResult res{k, search.parts(), r};
            if (!is_ktuple_domatic_partition(g, res.parts, k)) throw Error("domatic search produced an invalid partition");
            return res;
        }
    }
    throw Error("no k-tuple domatic partition found although V itself qualifies");
}

/// 1/2 + sqrt(1/4 + (2m - (k-1)n) / (k γ×k)).
inline double domatic_upper_bound(std::size_t n, std::size_t m, std::size_t k, std::size_t gamma_k) {
    const double slack = static_cast<double>(2 * m) - static_cast<double>((k - 1) * n);
    return 0.5 + std::sqrt(0.25 + slack / static_cast<double>(k * gamma_k));
}

/// -kγ d^2 + kγ d + 2m - (k-1)n, evaluated exactly. The domatic bound holds
/// for d iff this is >= 0 and is attained iff it is 0.
inline std::int64_t domatic_quadratic_form(std::size_t d, std::size_t n, std::size_t m, std::size_t k, std::size_t gamma_k) {
    const auto kg = static_cast<std::int64_t>(k * gamma_k);
    const auto dd = static_cast<std::int64_t>(d);
    return -kg * dd * dd + kg * dd + 2 * static_cast<std::int64_t>(m) -
           static_cast<std::int64_t>(k - 1) * static_cast<std::int64_t>(n);
}

/// d(G) = δ(G) + 1.
inline bool is_full(const Graph& g) {
    if (g.order() == 0) throw UndefinedParameter("fullness of the empty graph");
    const auto d = domatic_ktuple_exact(g, 1).value;
    if (d > g.min_degree() + 1) throw Error("domatic number exceeds δ+1");
    return d == g.min_degree() + 1;
}

} // namespace domino
