#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "domino/degree.hpp"
#include "domino/error.hpp"
#include "domino/graph.hpp"
#include "domino/slater.hpp"

namespace domino {

inline constexpr std::size_t brute_force_max_order = 24;

enum class BoundSource { double_slater, slater, degree_sum, edge_count, harary_haynes, exhausted_search };
enum class SolveMethod { brute_force, branch_and_bound };

inline std::string_view to_string(BoundSource s) {
    switch (s) {
    case BoundSource::double_slater: return "double-Slater";
    case BoundSource::slater: return "Slater";
    case BoundSource::degree_sum: return "degree-sum";
    case BoundSource::edge_count: return "edge-count";
    case BoundSource::harary_haynes: return "Harary-Haynes";
    case BoundSource::exhausted_search: return "exhausted-search";
    }
    return "unknown";
}

inline std::string_view to_string(SolveMethod m) {
    return m == SolveMethod::brute_force ? "brute-force" : "branch-and-bound";
}

/// An optimal k-tuple dominating set together with the argument for its
/// optimality. When `source` is a closed-form bound, lower_bound == value and
/// the bound alone proves optimality; otherwise the search was exhausted.
struct DominationCertificate {
    std::size_t k = 0;
    VertexSet set;
    std::size_t value = 0;
    std::size_t lower_bound = 0;
    BoundSource source = BoundSource::exhausted_search;
    std::size_t root_bound = 0;  ///< best closed-form bound before searching
    BoundSource root_source = BoundSource::harary_haynes;
    SolveMethod method = SolveMethod::brute_force;
    std::size_t nodes = 0;
};

/// True iff |N[v] ∩ S| >= k for every vertex v.
inline bool is_ktuple_dominating(const Graph& g, const VertexSet& s, std::size_t k) {
    for (Vertex v = 0; v < g.order(); ++v) {
        std::size_t c = g.neighbors(v).intersection_count(s) + (s.test(v) ? 1 : 0);
        if (c < k) return false;
    }
    return true;
}

namespace detail {

inline void require_ktuple_domain(const Graph& g, std::size_t k) {
    if (k < 1) throw UndefinedParameter("k-tuple domination needs k >= 1");
    if (g.order() > 0 && g.min_degree() + 1 < k)
        throw UndefinedParameter(
            fmt::format("k-tuple domination with k={} needs minimum degree >= {}, got {}", k, k - 1, g.min_degree()));
}

struct RootBound {
    std::size_t value = 0;
    BoundSource source = BoundSource::harary_haynes;
};

// Best closed-form lower bound; earlier candidates win ties.
inline RootBound root_lower_bound(const Graph& g, std::size_t k) {
    if (g.order() == 0) return {0, BoundSource::harary_haynes};
    const DegreeProfile p = degree_profile(g);
    std::vector<RootBound> candidates;
    if (k == 2 && p.min_degree >= 1) candidates.push_back({double_slater(p), BoundSource::double_slater});
    if (k == 1) candidates.push_back({slater_number(p), BoundSource::slater});
    if (k >= 3) candidates.push_back({degree_sum_bound(p, k), BoundSource::degree_sum});
    if (k == 2 && p.min_degree >= 1) {
        const auto e = edge_count_bound(p).ceil();
        candidates.push_back({static_cast<std::size_t>(std::max<std::int64_t>(e, 0)), BoundSource::edge_count});
    }
    candidates.push_back({harary_haynes_bound(p, k), BoundSource::harary_haynes});
    RootBound best = candidates.front();
    for (const auto& c : candidates)
        if (c.value > best.value) best = c;
    return best;
}

inline void finish_certificate(DominationCertificate& c, const Graph& g) {
    c.value = c.set.count();
    if (!is_ktuple_dominating(g, c.set, c.k)) throw Error("solver produced a set that is not k-tuple dominating");
    if (c.root_bound > c.value) throw Error("closed-form lower bound exceeds the solver's optimum");
    if (c.value == c.root_bound) {
        c.lower_bound = c.root_bound;
        c.source = c.root_source;
    } else {
        c.lower_bound = c.value;
        c.source = BoundSource::exhausted_search;
    }
}

} // namespace detail

/// Minimum k-tuple dominating set by scanning subsets in order of increasing
/// size. Independent of every bound and pruning rule; n <= 24.
inline DominationCertificate gamma_ktuple_bruteforce(const Graph& g, std::size_t k) {
    detail::require_ktuple_domain(g, k);
    const std::size_t n = g.order();
    if (n > brute_force_max_order)
        throw CapExceeded(fmt::format("brute-force solver supports n <= {}, got {}", brute_force_max_order, n));
    const auto closed = g.closed_masks();

    auto dominates = [&](std::uint64_t s) {
        for (std::size_t v = 0; v < n; ++v)
            if (static_cast<std::size_t>(std::popcount(closed[v] & s)) < k) return false;
        return true;
    };

    DominationCertificate c;
    c.k = k;
    c.method = SolveMethod::brute_force;
    const auto root = detail::root_lower_bound(g, k);
    c.root_bound = root.value;
    c.root_source = root.source;

    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::size_t size = 0; size <= n; ++size) {
        // Gosper's hack: next integer with the same popcount.
        std::uint64_t s = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
        while (s < limit) {
            ++c.nodes;
            if (dominates(s)) {
                c.set = VertexSet::from_mask(n, s);
                c.value = size;
                c.lower_bound = size;
                c.source = BoundSource::exhausted_search;
                if (c.set.count() != size || !is_ktuple_dominating(g, c.set, k))
                    throw Error("brute-force solver produced an invalid set");
                return c;
            }
            if (s == 0) break;
            const std::uint64_t low = s & (~s + 1);
            const std::uint64_t ripple = s + low;
            s = (((ripple ^ s) >> 2) / low) | ripple;
        }
    }
    throw Error("no k-tuple dominating set found although the minimum degree permits one");
}

struct BranchAndBoundOptions {
    /// Maximum search nodes; 0 means unlimited.
    std::size_t node_budget = 0;
};

namespace detail {

class KTupleSearch {
public:
    KTupleSearch(const Graph& g, std::size_t k, std::size_t budget)
        : g_(g), k_(k), n_(g.order()), budget_(budget), chosen_(n_), excluded_(n_), cover_(n_, 0) {
        closed_.reserve(n_);
        for (Vertex v = 0; v < n_; ++v) closed_.push_back(g.closed_neighborhood(v));
    }

    void include(Vertex u) {
        chosen_.set(u);
        closed_[u].for_each([&](Vertex w) { ++cover_[w]; });
    }
    void uninclude(Vertex u) {
        chosen_.reset(u);
        closed_[u].for_each([&](Vertex w) { --cover_[w]; });
    }

    // A vertex with |N[v]| = k needs all of N[v]; for k = 2 these are
    // exactly the end-vertices and their neighbors.
    void apply_forced() {
        for (Vertex v = 0; v < n_; ++v)
            if (closed_[v].count() == k_)
                closed_[v].for_each([&](Vertex w) {
                    if (!chosen_.test(w)) include(w);
                });
        forced_ = chosen_.count();
    }

    std::size_t forced_count() const { return forced_; }

    VertexSet greedy() {
        const VertexSet saved = chosen_;
        const auto saved_cover = cover_;
        for (;;) {
            const VertexSet def = deficient();
            if (def.empty()) break;
            Vertex best = n_;
            std::size_t best_gain = 0;
            for (Vertex u = 0; u < n_; ++u) {
                if (chosen_.test(u)) continue;
                const std::size_t gain = closed_[u].intersection_count(def);
                if (gain > best_gain) {
                    best_gain = gain;
                    best = u;
                }
            }
            if (best == n_) throw Error("greedy could not extend to a k-tuple dominating set");
            include(best);
        }
        VertexSet result = chosen_;
        chosen_ = saved;
        cover_ = saved_cover;
        return result;
    }

    /// Runs the search below the current state. Returns true when an
    /// incumbent of size `target_stop` was reached (no better one can exist).
    void solve(VertexSet incumbent, std::size_t stop_at) {
        best_ = std::move(incumbent);
        stop_at_ = stop_at;
        if (best_.count() > stop_at_) dfs();
    }

    const VertexSet& best() const { return best_; }
    std::size_t nodes() const { return nodes_; }

private:
    VertexSet deficient() const {
        VertexSet d(n_);
        for (Vertex v = 0; v < n_; ++v)
            if (cover_[v] < k_) d.set(v);
        return d;
    }

    // Returns false if the node is infeasible; otherwise writes the lower
    // bound on additional vertices needed.
    bool remaining_bound(const VertexSet& def, std::size_t& bound) const {
        std::size_t total = 0;
        std::size_t max_need = 0;
        bool feasible = true;
        def.for_each([&](Vertex v) {
            const std::size_t need = k_ - cover_[v];
            total += need;
            max_need = std::max(max_need, need);
            const std::size_t avail = closed_[v].count() - closed_[v].intersection_count(chosen_) -
                                      closed_[v].intersection_count(excluded_ - chosen_);
            if (avail < need) feasible = false;
        });
        if (!feasible) return false;
        gains_.clear();
        for (Vertex u = 0; u < n_; ++u)
            if (!chosen_.test(u) && !excluded_.test(u)) {
                const std::size_t gain = closed_[u].intersection_count(def);
                if (gain) gains_.push_back(gain);
            }
        std::sort(gains_.begin(), gains_.end(), std::greater<>());
        std::size_t picks = 0;
        std::size_t covered = 0;
        while (covered < total && picks < gains_.size()) covered += gains_[picks++];
        if (covered < total) return false;
        bound = std::max(picks, max_need);
        return true;
    }

    void dfs() {
        if (done_) return;
        if (budget_ && nodes_ >= budget_) throw BudgetExceeded("branch-and-bound node budget exhausted", best_.count(), stop_at_);
        ++nodes_;

        const VertexSet def = deficient();
        const std::size_t size = chosen_.count();
        if (def.empty()) {
            if (size < best_.count()) {
                best_ = chosen_;
                if (size <= stop_at_) done_ = true;
            }
            return;
        }
        std::size_t extra = 0;
        if (!remaining_bound(def, extra) || size + extra >= best_.count()) return;

        // branch on the deficient vertex with the least slack
        Vertex pivot = n_;
        std::size_t pivot_slack = n_ + 1;
        def.for_each([&](Vertex v) {
            const VertexSet avail = closed_[v] - chosen_ - excluded_;
            const std::size_t slack = avail.count() - (k_ - cover_[v]);
            if (slack < pivot_slack) {
                pivot_slack = slack;
                pivot = v;
            }
        });
        const std::size_t need = k_ - cover_[pivot];
        std::vector<Vertex> candidates = (closed_[pivot] - chosen_ - excluded_).to_vector();
        std::vector<std::size_t> gain(n_, 0);
        for (Vertex u : candidates) gain[u] = closed_[u].intersection_count(def);
        std::stable_sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) { return gain[a] > gain[b]; });

        std::vector<Vertex> newly_excluded;
        for (std::size_t i = 0; i < candidates.size() && candidates.size() - i >= need; ++i) {
            const Vertex u = candidates[i];
            include(u);
            dfs();
            uninclude(u);
            if (done_) break;
            excluded_.set(u);
            newly_excluded.push_back(u);
        }
        for (Vertex u : newly_excluded) excluded_.reset(u);
    }

    const Graph& g_;
    std::size_t k_;
    std::size_t n_;
    std::size_t budget_;
    std::vector<VertexSet> closed_;
    VertexSet chosen_;
    VertexSet excluded_;
    std::vector<std::size_t> cover_;
    std::size_t forced_ = 0;
    VertexSet best_;
    std::size_t stop_at_ = 0;
    std::size_t nodes_ = 0;
    bool done_ = false;
    mutable std::vector<std::size_t> gains_;
};

} // namespace detail

/// Minimum k-tuple dominating set by branch and bound.
///
/// Vertices with |N[v]| = k are fixed into the solution first. The search
/// starts from a greedy incumbent and stops as soon as the incumbent meets
/// the best closed-form lower bound, which then serves as the optimality
/// certificate. Throws BudgetExceeded when the node budget runs out.
inline DominationCertificate gamma_ktuple_bnb(const Graph& g, std::size_t k, const BranchAndBoundOptions& opt = {}) {
    detail::require_ktuple_domain(g, k);
    DominationCertificate c;
    c.k = k;
    c.method = SolveMethod::branch_and_bound;
    const auto root = detail::root_lower_bound(g, k);
    c.root_bound = root.value;
    c.root_source = root.source;

    detail::KTupleSearch search(g, k, opt.node_budget);
    search.apply_forced();
    VertexSet incumbent = search.greedy();
    search.solve(std::move(incumbent), std::max(root.value, search.forced_count()));
    c.set = search.best();
    c.nodes = search.nodes();
    detail::finish_certificate(c, g);
    return c;
}

} // namespace domino
