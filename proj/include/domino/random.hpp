#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "domino/domatic_families.hpp"
#include "domino/gadget.hpp"
#include "domino/graph.hpp"
#include "domino/omega.hpp"
#include "domino/orientation.hpp"

namespace domino {

using Rng = std::mt19937_64;

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// G(n, p) with each pair present independently.
inline Graph random_graph(Rng& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    Graph::Builder b(n);
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (coin(rng)) b.add_edge(u, v);
    return std::move(b).build();
}

/// Rejection-samples G(n, p) until δ >= min_degree (n must allow it).
inline Graph random_graph_min_degree(Rng& rng, std::size_t n, double p, std::size_t min_degree) {
    for (;;) {
        Graph g = random_graph(rng, n, p);
        if (n == 0 || g.min_degree() >= min_degree) return g;
    }
}

/// Comparability graph of a random poset with the transitive orientation
/// x -> y for x < y in the poset (vertices are shuffled).
inline std::pair<Graph, Orientation> random_comparability(Rng& rng, std::size_t n, double p) {
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), Vertex{0});
    std::shuffle(label.begin(), label.end(), rng);
    std::bernoulli_distribution coin(p);
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (coin(rng)) below[i][j] = true;
    for (std::size_t j = 0; j < n; ++j)  // transitive closure along the topological order
        for (std::size_t i = 0; i < j; ++i)
            if (below[i][j])
                for (std::size_t h = 0; h < i; ++h)
                    if (below[h][i]) below[h][j] = true;
    Graph::Builder b(n);
    Orientation d;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (below[i][j]) {
                b.add_edge(label[i], label[j]);
                d.arcs.emplace_back(label[i], label[j]);
            }
    return {std::move(b).build(), std::move(d)};
}

/// Random 3-CNF with `variables` variables and up to `clauses` clauses in
/// which no variable occurs in more than five clauses. With
/// `distinct_variables` each clause uses three different variables when
/// possible; otherwise the three literals are drawn independently, so
/// repeats and complementary pairs occur. Generation stops early once every
/// variable has reached the occurrence cap.
inline CnfFormula random_cnf(Rng& rng, std::size_t variables, std::size_t clauses, bool distinct_variables = true) {
    CnfFormula f;
    f.variables = variables;
    std::vector<std::size_t> used(variables + 1, 0);
    std::bernoulli_distribution sign(0.5);
    for (std::size_t j = 0; j < clauses; ++j) {
        std::vector<std::size_t> pool;
        for (std::size_t v = 1; v <= variables; ++v)
            if (used[v] < max_variable_occurrences) pool.push_back(v);
        if (pool.empty()) break;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::array<int, 3> clause{};
        for (std::size_t t = 0; t < 3; ++t) {
            const std::size_t v = distinct_variables ? pool[t % std::min<std::size_t>(pool.size(), 3)]
                                                     : pool[uniform_index(rng, 0, pool.size() - 1)];
            clause[t] = sign(rng) ? static_cast<int>(v) : -static_cast<int>(v);
        }
        std::set<std::size_t> vars;
        for (int lit : clause) vars.insert(static_cast<std::size_t>(std::abs(lit)));
        for (std::size_t v : vars) ++used[v];
        f.clauses.push_back(clause);
    }
    return f;
}

/// Random valid Ω parameters with |Y| = y_count.
inline OmegaParams random_omega_params(Rng& rng, std::size_t y_count, std::size_t max_x, std::size_t max_ends) {
    OmegaParams p;
    p.y_count = y_count;
    std::vector<std::size_t> order(y_count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t pairs = y_count < 2 ? 0 : uniform_index(rng, 0, y_count / 2);
    std::vector<bool> matched(y_count, false);
    for (std::size_t i = 0; i < pairs; ++i) {
        p.matching.emplace_back(order[2 * i], order[2 * i + 1]);
        matched[order[2 * i]] = matched[order[2 * i + 1]] = true;
    }
    p.end_vertices.assign(y_count, 0);
    for (std::size_t y = 0; y < y_count; ++y)
        if (!matched[y]) p.end_vertices[y] = uniform_index(rng, 1, std::max<std::size_t>(max_ends, 1));
    if (y_count >= 2) {
        auto random_pair = [&](std::size_t fixed) {
            std::size_t other = uniform_index(rng, 0, y_count - 2);
            if (other >= fixed) ++other;
            return std::make_pair(fixed, other);
        };
        for (std::size_t y = 0; y < y_count; ++y)  // every matched vertex needs an X-neighbor
            if (matched[y]) p.x_neighbors.push_back(random_pair(y));
        const std::size_t extra = uniform_index(rng, 0, max_x);
        for (std::size_t i = 0; i < extra; ++i) p.x_neighbors.push_back(random_pair(uniform_index(rng, 0, y_count - 1)));
    }
    return p;
}

/// Random valid Ω-tree parameters: `pairs` P2-copies and `stars` stars.
inline OmegaTreeParams random_omega_tree_params(Rng& rng, std::size_t pairs, std::size_t stars, std::size_t max_leaves) {
    for (;;) {
        OmegaTreeParams p;
        p.pair_copies = pairs;
        for (std::size_t j = 0; j < stars; ++j) p.star_leaves.push_back(uniform_index(rng, 1, std::max<std::size_t>(max_leaves, 1)));
        const std::size_t units = pairs + stars;
        // Random spanning tree on the units; each tree edge becomes a connector
        // between one anchor of each unit.
        std::vector<std::size_t> unit_order(units);
        std::iota(unit_order.begin(), unit_order.end(), std::size_t{0});
        std::shuffle(unit_order.begin(), unit_order.end(), rng);
        auto anchor = [&](std::size_t unit) {
            return unit < pairs ? 2 * unit + uniform_index(rng, 0, 1) : 2 * pairs + (unit - pairs);
        };
        for (std::size_t i = 1; i < units; ++i) {
            const std::size_t parent = unit_order[uniform_index(rng, 0, i - 1)];
            p.connectors.emplace_back(anchor(unit_order[i]), anchor(parent));
        }
        try {
            (void)build_omega_tree(p);
            return p;
        } catch (const ConstructionError&) {
            // a P2-copy with no connector (only when it is the sole unit); retry
            if (units == 1 && pairs == 1) throw;
        }
    }
}

/// Random valid Θ parameters with `parts` parts: part 0 hosts the isolated
/// vertex 0, and extra cross edges are added until every vertex outside v
/// sees every other part.
inline ThetaParams random_theta_params(Rng& rng, std::size_t parts, std::size_t max_part_order, double p) {
    if (parts == 0) throw ConstructionError("Θ needs at least one part");
    max_part_order = std::max<std::size_t>(max_part_order, 2);
    ThetaParams t;
    t.host = 0;
    t.v = 0;
    std::vector<std::size_t> offset{0};
    for (std::size_t j = 0; j < parts; ++j) {
        const std::size_t order = j == 0 ? uniform_index(rng, parts == 1 ? 1 : 2, max_part_order) : uniform_index(rng, 1, max_part_order);
        Graph part = random_graph(rng, order, p);
        if (j == 0) {  // isolate v
            Graph::Builder b(order);
            for (auto [x, y] : part.edges())
                if (x != 0 && y != 0) b.add_edge(x, y);
            part = std::move(b).build();
        }
        offset.push_back(offset.back() + order);
        t.parts.push_back(std::move(part));
    }
    t.links.assign(parts, 0);
    for (std::size_t j = 1; j < parts; ++j) t.links[j] = uniform_index(rng, 0, t.parts[j].order() - 1);

    const std::size_t n = offset.back();
    Graph::Builder cross(n);
    for (std::size_t j = 1; j < parts; ++j) cross.add_edge(0, offset[j] + t.links[j]);
    std::bernoulli_distribution coin(p / 2);
    for (Vertex x = 1; x < n; ++x)
        for (Vertex y = 1; y < x; ++y) {
            const auto px = static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), x) - offset.begin()) - 1;
            const auto py = static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), y) - offset.begin()) - 1;
            if (px != py && coin(rng) && cross.add_edge(y, x)) t.extra_edges.emplace_back(y, x);
        }
    for (std::size_t a = 0; a < parts; ++a)
        for (Vertex x = offset[a]; x < offset[a + 1]; ++x) {
            if (x == 0) continue;
            for (std::size_t b = 0; b < parts; ++b) {
                if (b == a) continue;
                bool covered = false;
                for (Vertex y = offset[b]; y < offset[b + 1]; ++y)
                    if (cross.has_edge(x, y)) covered = true;
                if (covered) continue;
                const Vertex lo = b == 0 ? 1 : offset[b];  // never v
                const Vertex y = static_cast<Vertex>(uniform_index(rng, lo, offset[b + 1] - 1));
                cross.add_edge(x, y);
                t.extra_edges.emplace_back(std::min(x, y), std::max(x, y));
            }
        }
    return t;
}

} // namespace domino
