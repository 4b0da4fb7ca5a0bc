#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>

#include <fmt/format.h>

#include "domino/degree.hpp"
#include "domino/error.hpp"
#include "domino/graph.hpp"

namespace domino {

/// Exact rational with positive denominator, kept in lowest terms.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Fraction make(std::int64_t num, std::int64_t den) {
        assert(den != 0);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        return g > 1 ? Fraction{num / g, den / g} : Fraction{num, den};
    }

    bool is_integer() const { return den == 1; }
    std::int64_t ceil() const { return num >= 0 ? (num + den - 1) / den : -((-num) / den); }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Fraction& a, const Fraction& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator==(const Fraction& a, std::int64_t k) { return a.num == k * a.den; }
    friend bool operator<=(const Fraction& a, std::int64_t k) { return a.num <= k * a.den; }
    friend bool operator<(const Fraction& a, std::int64_t k) { return a.num < k * a.den; }
};

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

/// sℓ(G) = min{t >= 1 : t + d_1 + ... + d_t >= n}.
inline std::size_t slater_number(const DegreeProfile& p) {
    if (p.n == 0) throw UndefinedParameter("Slater number of the empty graph");
    for (std::size_t t = 1; t <= p.n; ++t)
        if (t + p.prefix[t] >= p.n) return t;
    return p.n;
}

/// The predicate t + d_1 + ... + d_{t-e} >= 2n - p, with an empty sum when
/// t <= e.
inline bool double_slater_holds(const DegreeProfile& p, std::size_t t) {
    const std::size_t lhs = t + (t > p.end_vertices ? p.prefix[t - p.end_vertices] : 0);
    return lhs + p.penultimate >= 2 * p.n;
}

/// sℓ×2(G) = min{t : t + d_1 + ... + d_{t-e} >= 2n - p}; requires δ >= 1.
inline std::size_t double_slater(const DegreeProfile& p) {
    if (p.n == 0 || p.min_degree == 0)
        throw UndefinedParameter("double Slater number requires a graph without isolated vertices");
    for (std::size_t t = 1; t <= p.n; ++t) {
        if (double_slater_holds(p, t)) {
#ifndef NDEBUG
            for (std::size_t u = t; u <= p.n; ++u) assert(double_slater_holds(p, u));
#endif
            return t;
        }
    }
    // t = n always satisfies the predicate when δ >= 1.
    throw Error(fmt::format("double Slater predicate never holds (n={}, m={})", p.n, p.m));
}

/// Degree-sum lower bound on the k-tuple domination number:
/// min{t : t + d_1 + ... + d_t >= kn}. Equals sℓ for k = 1 and the δ >= 2
/// form of sℓ×2 for k = 2.
inline std::size_t degree_sum_bound(const DegreeProfile& p, std::size_t k) {
    for (std::size_t t = 0; t <= p.n; ++t)
        if (t + p.prefix[t] >= k * p.n) return t;
    return p.n + 1;
}

struct RegularBounds {
    std::size_t lower = 0;  ///< ⌈2n/(1+Δ)⌉
    std::size_t upper = 0;  ///< ⌈2n/(1+δ)⌉
};

/// Degree bounds on sℓ×2 for graphs with δ >= 2.
inline RegularBounds regular_bounds(const DegreeProfile& p) {
    if (p.min_degree < 2)
        throw HypothesisViolation(fmt::format("degree bounds on sℓ×2 need δ >= 2, got δ = {}", p.min_degree));
    return {ceil_div(2 * p.n, 1 + p.max_degree), ceil_div(2 * p.n, 1 + p.min_degree)};
}

/// ⌈2n/(1+Δ)⌉, a lower bound on γ×2 for every graph without isolated vertices.
inline std::size_t harary_haynes_bound(const DegreeProfile& p, std::size_t k = 2) {
    return ceil_div(k * p.n, 1 + p.max_degree);
}

/// Both sides of each biconditional are reported separately so a caller can
/// assert the equivalences.
struct SlaterGapChecks {
    std::size_t sl = 0;
    std::size_t sl2 = 0;
    std::size_t gap_cap = 0;  ///< ⌈n/(δ+1)⌉
    bool gap_within_bounds = false;  ///< 1 <= sℓ×2 - sℓ <= ⌈n/(δ+1)⌉
    bool range_holds = false;        ///< 2 <= sℓ×2 <= n

    bool sl2_is_two = false;
    bool two_universal_vertices = false;  ///< at least two vertices of degree n-1
    bool sl2_is_n = false;
    bool size_small = false;  ///< m <= ⌊(n+δ)/2⌋

    bool sl2_meets_lower = false;         ///< sℓ×2 = 2n/(1+Δ)
    bool divisible_and_top_degree = false;  ///< (1+Δ) | 2n and d_{2n/(1+Δ)} = Δ

    bool all_hold() const {
        return gap_within_bounds && range_holds && sl2_is_two == two_universal_vertices && sl2_is_n == size_small &&
               sl2_meets_lower == divisible_and_top_degree;
    }
};

inline SlaterGapChecks slater_gap_checks(const Graph& g) {
    const DegreeProfile p = degree_profile(g);
    if (p.n == 0 || p.min_degree < 2)
        throw HypothesisViolation(fmt::format("these checks need δ >= 2, got δ = {}", p.min_degree));
    SlaterGapChecks c;
    c.sl = slater_number(p);
    c.sl2 = double_slater(p);
    c.gap_cap = ceil_div(p.n, p.min_degree + 1);
    c.gap_within_bounds = c.sl2 >= c.sl + 1 && c.sl2 - c.sl <= c.gap_cap;
    c.range_holds = c.sl2 >= 2 && c.sl2 <= p.n;

    std::size_t universal = 0;
    for (std::size_t d : p.degrees)
        if (d == p.n - 1) ++universal;
    c.sl2_is_two = c.sl2 == 2;
    c.two_universal_vertices = universal >= 2;
    c.sl2_is_n = c.sl2 == p.n;
    c.size_small = p.m <= (p.n + p.min_degree) / 2;

    const std::size_t denom = 1 + p.max_degree;
    c.sl2_meets_lower = c.sl2 * denom == 2 * p.n;
    c.divisible_and_top_degree = (2 * p.n) % denom == 0 && p.d(2 * p.n / denom) == p.max_degree;
    return c;
}

/// (4n - 2m + e - p) / 3, a lower bound on sℓ×2 and hence on γ×2.
inline Fraction edge_count_bound(const DegreeProfile& p) {
    const auto n = static_cast<std::int64_t>(p.n);
    const auto m = static_cast<std::int64_t>(p.m);
    const auto e = static_cast<std::int64_t>(p.end_vertices);
    const auto pp = static_cast<std::int64_t>(p.penultimate);
    return Fraction::make(4 * n - 2 * m + e - pp, 3);
}

/// Degree-sequence test for sℓ×2 attaining edge_count_bound. Requires δ >= 1.
///
/// n + m + e - p ≡ 0 (mod 3) and
///   δ >= 2: d_q = 2 with q = (4n - 2m + 3)/3;
///   δ = 1:  n = 2m - e + p, or n < 2m - e + p and d_q = 2 with
///           q = (4n - 2m - 2e - p + 3)/3.
/// An index q outside 1..n makes the d_q condition false.
inline bool edge_count_bound_attained(const DegreeProfile& p) {
    if (p.n == 0 || p.min_degree == 0)
        throw UndefinedParameter("the edge-count bound needs a graph without isolated vertices");
    const auto n = static_cast<std::int64_t>(p.n);
    const auto m = static_cast<std::int64_t>(p.m);
    const auto e = static_cast<std::int64_t>(p.end_vertices);
    const auto pp = static_cast<std::int64_t>(p.penultimate);
    if (((n + m + e - pp) % 3 + 3) % 3 != 0) return false;

    auto degree_two_at = [&](std::int64_t numerator) {
        if (numerator % 3 != 0) return false;
        const std::int64_t q = numerator / 3;
        return q >= 1 && q <= n && p.d(static_cast<std::size_t>(q)) == 2;
    };
    if (p.min_degree >= 2) return degree_two_at(4 * n - 2 * m + 3);
    const std::int64_t rhs = 2 * m - e + pp;
    if (n == rhs) return true;
    return n < rhs && degree_two_at(4 * n - 2 * m - 2 * e - pp + 3);
}

/// Everything the `slater` CLI subcommand reports about a graph.
struct SlaterReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t sl = 0;
    std::optional<std::size_t> sl2;  ///< absent when δ = 0
    std::size_t lb_regular = 0;      ///< ⌈2n/(1+Δ)⌉
    std::optional<std::size_t> ub_regular;  ///< ⌈2n/(1+δ)⌉, only when δ >= 2
    std::optional<Fraction> edge_bound;     ///< absent when δ = 0
    std::optional<bool> edge_bound_attained;
    std::optional<SlaterGapChecks> gap_checks;  ///< only when δ >= 2
};

inline SlaterReport slater_report(const Graph& g) {
    const DegreeProfile p = degree_profile(g);
    if (p.n == 0) throw UndefinedParameter("Slater report of the empty graph");
    SlaterReport r;
    r.n = p.n;
    r.m = p.m;
    r.sl = slater_number(p);
    r.lb_regular = ceil_div(2 * p.n, 1 + p.max_degree);
    if (p.min_degree >= 1) {
        r.sl2 = double_slater(p);
        r.edge_bound = edge_count_bound(p);
        r.edge_bound_attained = edge_count_bound_attained(p);
    }
    if (p.min_degree >= 2) {
        r.ub_regular = regular_bounds(p).upper;
        r.gap_checks = slater_gap_checks(g);
    }
    return r;
}

/// Star K_{1,n-1} (hub 0) with a path through the n-1 leaves, n = 4b + 4.
/// Its sℓ×2 exceeds ⌈2n/(1+Δ)⌉ = 2 by exactly b.
inline Graph star_path_graph(std::size_t b) {
    if (b < 1) throw ConstructionError("star-path construction needs b >= 1");
    const std::size_t n = 4 * b + 4;
    Graph::Builder builder(n);
    for (Vertex v = 1; v < n; ++v) builder.add_edge(0, v);
    for (Vertex v = 2; v < n; ++v) builder.add_edge(v - 1, v);
    return std::move(builder).build();
}

/// Path P_{6b+4} (vertices 0..6b+3) with one pendant leaf per path vertex
/// (leaf of i is 6b+4+i). Order 12b + 8.
inline Graph spider_tree(std::size_t b) {
    if (b < 1) throw ConstructionError("spider tree construction needs b >= 1");
    const std::size_t spine = 6 * b + 4;
    Graph::Builder builder(2 * spine);
    for (Vertex v = 1; v < spine; ++v) builder.add_edge(v - 1, v);
    for (Vertex v = 0; v < spine; ++v) builder.add_edge(v, spine + v);
    return std::move(builder).build();
}

} // namespace domino
