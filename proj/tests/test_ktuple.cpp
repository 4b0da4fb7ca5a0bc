#include <gtest/gtest.h>

#include "domino/io.hpp"
#include "domino/ktuple.hpp"
#include "domino/random.hpp"
#include "oracles.hpp"

using namespace domino;

TEST(KTuple, DominationPredicate) {
    const Graph c6 = Graph::cycle(6);
    EXPECT_TRUE(is_ktuple_dominating(c6, VertexSet(6, {0, 1, 3, 4}), 2));
    EXPECT_FALSE(is_ktuple_dominating(c6, VertexSet(6, {0, 2, 4}), 2));
    EXPECT_TRUE(is_ktuple_dominating(c6, VertexSet(6, {0, 3}), 1));
}

TEST(KTuple, DomainErrors) {
    EXPECT_THROW(gamma_ktuple_bruteforce(Graph::path(3), 3), UndefinedParameter);
    EXPECT_THROW(gamma_ktuple_bnb(Graph::empty(2), 2), UndefinedParameter);
    EXPECT_THROW(gamma_ktuple_bnb(Graph::cycle(5), 0), UndefinedParameter);
    EXPECT_THROW(gamma_ktuple_bruteforce(Graph::cycle(25), 2), CapExceeded);
}

TEST(KTuple, KnownValues) {
    EXPECT_EQ(gamma_ktuple_bnb(Graph::cycle(6), 2).value, 4u);
    EXPECT_EQ(gamma_ktuple_bnb(Graph::complete(5), 3).value, 3u);
    EXPECT_EQ(gamma_ktuple_bnb(Graph::path(5), 2).value, 4u);
    EXPECT_EQ(gamma_ktuple_bnb(Graph::empty(4), 1).value, 4u);
    EXPECT_EQ(gamma_ktuple_bnb(Graph::cycle(9), 1).value, 3u);
}

TEST(KTuple, SolversAgreeWithOracle) {
    Rng rng(21);
    for (int i = 0; i < 400; ++i) {
        const std::size_t n = uniform_index(rng, 1, 11);
        const std::size_t k = uniform_index(rng, 1, 3);
        const Graph g = random_graph(rng, n, 0.5);
        if (g.min_degree() + 1 < k) continue;
        const int expected = oracle::gamma_ktuple(g, k);
        const auto brute = gamma_ktuple_bruteforce(g, k);
        const auto bnb = gamma_ktuple_bnb(g, k);
        EXPECT_EQ(static_cast<int>(brute.value), expected) << emit_graph6(g) << " k=" << k;
        EXPECT_EQ(static_cast<int>(bnb.value), expected) << emit_graph6(g) << " k=" << k;
        EXPECT_TRUE(is_ktuple_dominating(g, bnb.set, k));
        EXPECT_LE(bnb.root_bound, bnb.value);
    }
}

TEST(KTuple, BranchAndBoundOnLargerGraphs) {
    Rng rng(4);
    for (int i = 0; i < 30; ++i) {
        const Graph g = random_graph_min_degree(rng, uniform_index(rng, 14, 20), 0.3, 1);
        EXPECT_EQ(gamma_ktuple_bnb(g, 2).value, gamma_ktuple_bruteforce(g, 2).value) << emit_graph6(g);
    }
}

TEST(KTuple, CertificateSourceNamesTheBound) {
    const auto c = gamma_ktuple_bnb(Graph::cycle(6), 2);
    EXPECT_EQ(c.source, BoundSource::double_slater);
    EXPECT_EQ(c.lower_bound, 4u);
    Rng rng(12);
    bool saw_search = false;
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_graph_min_degree(rng, uniform_index(rng, 4, 12), 0.3, 1);
        const auto cert = gamma_ktuple_bnb(g, 2);
        if (cert.source == BoundSource::exhausted_search) {
            saw_search = true;
            EXPECT_LT(cert.root_bound, cert.value);
        } else {
            EXPECT_EQ(cert.root_bound, cert.value);
        }
        EXPECT_EQ(cert.lower_bound, cert.value);
    }
    EXPECT_TRUE(saw_search);
    const auto brute = gamma_ktuple_bruteforce(Graph::path(4), 2);
    EXPECT_EQ(brute.value, 4u);
    EXPECT_EQ(brute.method, SolveMethod::brute_force);
}

TEST(KTuple, ForcedVerticesWhenNeighborhoodIsTight) {
    // in a star every vertex has |N[v]| <= 2 except the center, so k=2 takes all
    Graph::Builder b(5);
    for (Vertex v = 1; v < 5; ++v) b.add_edge(0, v);
    const Graph star = std::move(b).build();
    EXPECT_EQ(gamma_ktuple_bnb(star, 2).value, 5u);
}

TEST(KTuple, BudgetExceededReportsGap) {
    Rng rng(8);
    const Graph g = random_graph_min_degree(rng, 40, 0.15, 2);
    try {
        gamma_ktuple_bnb(g, 2, {1});
        SUCCEED();  // the greedy incumbent may already meet the bound
    } catch (const BudgetExceeded& e) {
        EXPECT_GE(e.incumbent(), e.lower_bound());
        EXPECT_EQ(e.gap(), e.incumbent() - e.lower_bound());
    }
}

TEST(KTuple, RootBoundNeverExceedsOptimum) {
    Rng rng(31);
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_graph(rng, uniform_index(rng, 2, 10), 0.5);
        for (std::size_t k = 1; k <= 3; ++k) {
            if (g.min_degree() + 1 < k) continue;
            const auto root = detail::root_lower_bound(g, k);
            EXPECT_LE(root.value, static_cast<std::size_t>(oracle::gamma_ktuple(g, k))) << emit_graph6(g) << " k=" << k;
        }
    }
}
