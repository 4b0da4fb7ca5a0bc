#include <gtest/gtest.h>

#include "domino/degree.hpp"
#include "domino/graph.hpp"
#include "domino/traversal.hpp"
#include "domino/vertex_set.hpp"

using namespace domino;

TEST(VertexSet, BasicOperations) {
    VertexSet a(130, {0, 64, 129});
    VertexSet b(130, {64, 65});
    EXPECT_EQ(a.count(), 3u);
    EXPECT_TRUE(a.test(129));
    EXPECT_EQ(a.intersection_count(b), 1u);
    EXPECT_EQ((a | b).count(), 4u);
    EXPECT_EQ((a & b).to_vector(), std::vector<Vertex>{64});
    EXPECT_EQ((a - b).to_vector(), (std::vector<Vertex>{0, 129}));
    EXPECT_EQ(a.complement().count(), 127u);
    EXPECT_FALSE(a.complement().test(129));
    EXPECT_TRUE((a & b).is_subset_of(a));
    EXPECT_EQ(VertexSet(5).first(), 5u);
    EXPECT_EQ(VertexSet::full(70).count(), 70u);
    EXPECT_EQ(VertexSet::from_mask(6, 0b101001).to_vector(), (std::vector<Vertex>{0, 3, 5}));
}

TEST(VertexSet, ComplementKeepsPaddingClear) {
    VertexSet s(3);
    const VertexSet c = s.complement();
    EXPECT_EQ(c.count(), 3u);
    EXPECT_EQ(c.complement().count(), 0u);
}

TEST(Graph, BuilderRejectsLoopsAndRange) {
    Graph::Builder b(3);
    EXPECT_TRUE(b.add_edge(0, 1));
    EXPECT_FALSE(b.add_edge(1, 0));
    EXPECT_THROW(b.add_edge(2, 2), Error);
    EXPECT_THROW(b.add_edge(0, 3), Error);
    const Graph g = std::move(b).build();
    EXPECT_EQ(g.size(), 1u);
    EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(Graph, Factories) {
    EXPECT_EQ(Graph::complete(5).size(), 10u);
    EXPECT_EQ(Graph::path(5).size(), 4u);
    EXPECT_EQ(Graph::cycle(7).size(), 7u);
    EXPECT_TRUE(Graph::cycle(7).is_regular());
    const Graph c = Graph::circulant(8, {1, 4});
    EXPECT_TRUE(c.is_regular());
    EXPECT_EQ(c.max_degree(), 3u);
    EXPECT_EQ(Graph::empty(4).size(), 0u);
}

TEST(Graph, UpperMaskFollowsColumnOrder) {
    // pairs in order (0,1), (0,2), (1,2), (0,3), ...
    const Graph g = Graph::from_upper_mask(4, 0b000100);
    ASSERT_EQ(g.size(), 1u);
    EXPECT_TRUE(g.adjacent(1, 2));
}

TEST(Graph, InducedSubgraphRelabels) {
    const Graph g = Graph::cycle(6);
    const Graph h = g.induced(VertexSet(6, {0, 1, 2, 4}));
    EXPECT_EQ(h.order(), 4u);
    EXPECT_EQ(h.size(), 2u);  // 0-1, 1-2
    EXPECT_TRUE(h.adjacent(0, 1));
    EXPECT_TRUE(h.adjacent(1, 2));
    EXPECT_EQ(h.degree(3), 0u);
}

TEST(Graph, ClosedNeighborhoodIncludesVertex) {
    const Graph p = Graph::path(3);
    EXPECT_EQ(p.closed_neighborhood(1).count(), 3u);
    EXPECT_EQ(p.closed_masks()[0], 0b011u);
}

TEST(Degree, ProfileOfStarPath) {
    // star K_{1,4} with leaves joined in a path: degrees 4,3,3,2,2
    Graph::Builder b(5);
    for (Vertex v = 1; v < 5; ++v) b.add_edge(0, v);
    for (Vertex v = 2; v < 5; ++v) b.add_edge(v - 1, v);
    const auto p = degree_profile(std::move(b).build());
    EXPECT_EQ(p.degrees, (std::vector<std::size_t>{4, 3, 3, 2, 2}));
    EXPECT_EQ(p.prefix[3], 10u);
    EXPECT_EQ(p.m, 7u);
    EXPECT_EQ(p.end_vertices, 0u);
}

TEST(Degree, EndAndPenultimateVertices) {
    const Graph p4 = Graph::path(4);
    EXPECT_EQ(end_vertex_set(p4).to_vector(), (std::vector<Vertex>{0, 3}));
    EXPECT_EQ(penultimate_vertex_set(p4).to_vector(), (std::vector<Vertex>{1, 2}));
    const Graph k2 = Graph::path(2);
    const auto p = degree_profile(k2);
    EXPECT_EQ(p.end_vertices, 2u);
    EXPECT_EQ(p.penultimate, 2u);
}

TEST(Traversal, ConnectivityAndDiameter) {
    EXPECT_TRUE(is_connected(Graph::cycle(5)));
    EXPECT_EQ(diameter(Graph::cycle(5)), 2u);
    EXPECT_EQ(diameter(Graph::path(6)), 5u);
    EXPECT_FALSE(diameter(Graph::empty(2)).has_value());
    EXPECT_TRUE(is_tree(Graph::path(4)));
    EXPECT_FALSE(is_tree(Graph::cycle(4)));
    EXPECT_FALSE(is_tree(Graph::empty(2)));
}
