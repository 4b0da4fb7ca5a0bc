#include <gtest/gtest.h>

#include "domino/io.hpp"
#include "domino/random.hpp"
#include "domino/slater.hpp"
#include "oracles.hpp"

using namespace domino;

TEST(Fraction, ReducesAndRounds) {
    const Fraction f = Fraction::make(10, 3);
    EXPECT_EQ(f.ceil(), 4);
    EXPECT_FALSE(f.is_integer());
    const Fraction g = Fraction::make(-4, 6);
    EXPECT_EQ(g.num, -2);
    EXPECT_EQ(g.den, 3);
    EXPECT_EQ(g.ceil(), 0);
    EXPECT_TRUE(Fraction::make(12, 3).is_integer());
}

TEST(Slater, CycleSix) {
    const auto p = degree_profile(Graph::cycle(6));
    EXPECT_EQ(slater_number(p), 2u);
    EXPECT_EQ(double_slater(p), 4u);
}

TEST(Slater, MatchesDefinitionOracle) {
    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_graph_min_degree(rng, uniform_index(rng, 2, 14), 0.35, 1);
        EXPECT_EQ(double_slater(degree_profile(g)), oracle::double_slater(g)) << emit_graph6(g);
    }
}

TEST(Slater, MonotoneInT) {
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        const Graph g = random_graph_min_degree(rng, uniform_index(rng, 2, 12), 0.4, 1);
        const auto p = degree_profile(g);
        const auto t0 = double_slater(p);
        for (std::size_t t = 0; t <= p.n; ++t) EXPECT_EQ(double_slater_holds(p, t), t >= t0);
    }
}

TEST(Slater, UndefinedWithIsolatedVertex) {
    EXPECT_THROW(double_slater(degree_profile(Graph::empty(3))), UndefinedParameter);
    EXPECT_THROW(regular_bounds(degree_profile(Graph::path(4))), HypothesisViolation);
}

TEST(Slater, RegularFormula) {
    for (std::size_t n = 3; n <= 300; ++n) EXPECT_EQ(double_slater(degree_profile(Graph::cycle(n))), ceil_div(2 * n, 3));
    for (std::size_t r = 2; r <= 4; ++r)
        for (std::size_t n = r + 1; n <= 60; ++n) {
            if ((n * r) % 2) continue;
            std::vector<std::size_t> jumps;
            for (std::size_t j = 1; j <= r / 2; ++j) jumps.push_back(j);
            if (r % 2) jumps.push_back(n / 2);
            const Graph g = Graph::circulant(n, jumps);
            ASSERT_TRUE(g.is_regular());
            ASSERT_EQ(g.max_degree(), r);
            EXPECT_EQ(double_slater(degree_profile(g)), ceil_div(2 * n, 1 + r));
        }
}

TEST(Slater, DegreeSumBoundGeneralizesSlater) {
    Rng rng(2);
    for (int i = 0; i < 50; ++i) {
        const auto p = degree_profile(random_graph(rng, uniform_index(rng, 1, 15), 0.3));
        EXPECT_EQ(degree_sum_bound(p, 1), slater_number(p));
    }
}

TEST(Slater, StarPathGap) {
    for (std::size_t b = 1; b <= 10; ++b) {
        const Graph g = star_path_graph(b);
        const auto p = degree_profile(g);
        EXPECT_EQ(p.n, 4 * b + 4);
        EXPECT_EQ(double_slater(p), b + 2);
        EXPECT_EQ(harary_haynes_bound(p), 2u);
    }
    const auto p = degree_profile(star_path_graph(3));
    std::vector<std::size_t> expected{15};
    expected.insert(expected.end(), 13, 3);
    expected.insert(expected.end(), 2, 2);
    EXPECT_EQ(p.degrees, expected);
}

TEST(Slater, SpiderTreeGap) {
    for (std::size_t b = 1; b <= 10; ++b) {
        const Graph t = spider_tree(b);
        ASSERT_TRUE(is_tree(t));
        const auto p = degree_profile(t);
        EXPECT_EQ(double_slater(p), 9 * b + 6);
        const auto tree_bound_times3 = 2 * p.n + p.end_vertices - p.penultimate + 2;
        ASSERT_EQ(tree_bound_times3 % 3, 0u);
        EXPECT_EQ(double_slater(p) - tree_bound_times3 / 3, b);
    }
}

TEST(EdgeCountBound, SmallCases) {
    const auto c6 = degree_profile(Graph::cycle(6));
    EXPECT_EQ(edge_count_bound(c6).num, 4);
    EXPECT_TRUE(edge_count_bound_attained(c6));
    const auto p5 = degree_profile(Graph::path(5));
    EXPECT_EQ(edge_count_bound(p5).num, 4);
    const auto p4 = degree_profile(Graph::path(4));
    EXPECT_EQ(edge_count_bound(p4).num, 10);
    EXPECT_EQ(edge_count_bound(p4).den, 3);
    EXPECT_FALSE(edge_count_bound_attained(p4));
    const auto k4 = degree_profile(Graph::complete(4));
    EXPECT_FALSE(edge_count_bound_attained(k4));
    EXPECT_THROW(edge_count_bound_attained(degree_profile(Graph::empty(2))), UndefinedParameter);
}

TEST(EdgeCountBound, PredicateMatchesEquality) {
    Rng rng(13);
    for (int i = 0; i < 500; ++i) {
        const Graph g = random_graph_min_degree(rng, uniform_index(rng, 2, 16), uniform_index(rng, 1, 6) / 10.0, 1);
        const auto p = degree_profile(g);
        const Fraction b = edge_count_bound(p);
        const auto sl2 = static_cast<std::int64_t>(double_slater(p));
        EXPECT_GE(sl2, b.ceil());
        EXPECT_EQ(edge_count_bound_attained(p), b.is_integer() && b.num == sl2) << emit_graph6(g);
    }
}

TEST(GapChecks, PropositionBiconditionals) {
    Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_graph_min_degree(rng, uniform_index(rng, 3, 14), 0.5, 2);
        EXPECT_TRUE(slater_gap_checks(g).all_hold()) << emit_graph6(g);
    }
}

TEST(GapChecks, SharpnessInstances) {
    for (std::size_t n = 3; n <= 10; ++n) {
        const auto c = slater_gap_checks(Graph::complete(n));
        EXPECT_EQ(c.sl2 - c.sl, 1u);
        EXPECT_TRUE(c.sl2_is_two);
    }
    for (std::size_t n = 3; n <= 20; ++n) {
        if (n % 3 == 1) continue;
        const auto c = slater_gap_checks(Graph::cycle(n));
        EXPECT_EQ(c.sl2 - c.sl, ceil_div(n, 3)) << n;
        EXPECT_EQ(c.sl2 - c.sl, c.gap_cap);
    }
}

TEST(SlaterReport, FieldsByMinimumDegree) {
    const auto r0 = slater_report(Graph::empty(3));
    EXPECT_FALSE(r0.sl2.has_value());
    EXPECT_FALSE(r0.gap_checks.has_value());
    const auto r1 = slater_report(Graph::path(5));
    EXPECT_EQ(r1.sl2, 4u);
    EXPECT_FALSE(r1.ub_regular.has_value());
    const auto r2 = slater_report(Graph::cycle(6));
    EXPECT_EQ(r2.ub_regular, 4u);
    ASSERT_TRUE(r2.gap_checks.has_value());
    EXPECT_TRUE(r2.gap_checks->all_hold());
}
