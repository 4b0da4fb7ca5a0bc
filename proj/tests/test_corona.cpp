#include <gtest/gtest.h>

#include "domino/io.hpp"
#include "domino/corona.hpp"
#include "domino/ktuple.hpp"
#include "domino/orientation.hpp"
#include "domino/random.hpp"
#include "domino/traversal.hpp"

using namespace domino;

TEST(Corona, StructureAndOrder) {
    const Corona c = corona(Graph::path(3), Graph::cycle(4));
    EXPECT_EQ(c.graph.order(), 15u);
    EXPECT_EQ(c.graph.size(), 2u + 3 * 4 + 3 * 4);
    for (Vertex i = 0; i < 3; ++i)
        for (Vertex x = 0; x < 4; ++x) {
            const Vertex v = c.copy_vertex(i, x);
            EXPECT_EQ(c.owner[v], i);
            EXPECT_TRUE(c.graph.adjacent(i, v));
            EXPECT_EQ(c.graph.degree(v), 3u);
        }
    EXPECT_THROW(corona(Graph::empty(0), Graph::path(2)), ConstructionError);
}

TEST(Corona, ProductFormulaOnSmallPairs) {
    Rng rng(41);
    for (int i = 0; i < 25; ++i) {
        const Graph g = random_graph(rng, uniform_index(rng, 1, 3), 0.5);
        const Graph h = random_graph_min_degree(rng, uniform_index(rng, 2, 4), 0.6, 1);
        const Graph gh = corona(g, h).graph;
        for (std::size_t k = 2; k <= 3; ++k) {
            if (h.min_degree() + 2 < k) continue;
            EXPECT_EQ(gamma_ktuple_bnb(gh, k).value, g.order() * (gamma_ktuple_bnb(h, k - 1).value + 1))
                << emit_graph6(g) << " " << emit_graph6(h) << " k=" << k;
        }
    }
}

TEST(Corona, TowerRaisesDominationByOne) {
    EXPECT_THROW(k1_corona_tower(Graph::path(2), 1), ConstructionError);
    Rng rng(43);
    for (int i = 0; i < 20; ++i) {
        const Graph h = random_graph(rng, uniform_index(rng, 1, 6), 0.4);
        const auto tower = k1_corona_tower(h, 4);
        ASSERT_EQ(tower.size(), 4u);
        const auto gamma = gamma_ktuple_bnb(h, 1).value;
        for (std::size_t k = 2; k <= 4; ++k) {
            EXPECT_EQ(tower[k - 1].order(), h.order() + k - 1);
            EXPECT_EQ(gamma_ktuple_bnb(tower[k - 1], k).value, gamma + k - 1) << emit_graph6(h);
            EXPECT_LE(diameter(tower[k - 1]).value_or(99), 2u);
        }
    }
}

TEST(Orientation, ExtensionStaysTransitive) {
    Rng rng(47);
    for (int i = 0; i < 30; ++i) {
        auto [h, d] = random_comparability(rng, uniform_index(rng, 1, 8), 0.5);
        ASSERT_TRUE(is_transitive_orientation(h, d));
        const auto ext = extend_transitive_orientation(h, d);
        EXPECT_EQ(ext.graph.order(), h.order() + 1);
        EXPECT_EQ(ext.arcs.arcs.size(), h.size() + h.order());
        EXPECT_TRUE(is_transitive_orientation(ext.graph, ext.arcs));
    }
}

TEST(Orientation, RejectsViolationsAndBadArcs) {
    const Graph p3 = Graph::path(3);
    const Orientation chain{{{0, 1}, {1, 2}}};  // needs 0->2, which is not an edge
    EXPECT_FALSE(is_transitive_orientation(p3, chain));
    EXPECT_THROW(extend_transitive_orientation(p3, chain), ConstructionError);
    EXPECT_THROW(check_orientation(p3, Orientation{{{0, 2}, {1, 2}}}), ConstructionError);
    EXPECT_THROW(check_orientation(p3, Orientation{{{0, 1}}}), ConstructionError);
    EXPECT_THROW(check_orientation(p3, Orientation{{{0, 1}, {1, 0}}}), ConstructionError);
    const Orientation sink{{{0, 1}, {2, 1}}};
    EXPECT_TRUE(is_transitive_orientation(p3, sink));
}
