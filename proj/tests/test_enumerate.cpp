#include <gtest/gtest.h>

#include <set>

#include "domino/enumerate.hpp"
#include "domino/traversal.hpp"

using namespace domino;

namespace {

std::uint64_t count(std::size_t n, const GraphFilter& f) {
    std::uint64_t c = 0;
    enumerate_graphs(n, f, [&](const Graph&) { ++c; });
    return c;
}

} // namespace

TEST(Enumerate, AllLabeledGraphs) {
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(count(n, {}), std::uint64_t{1} << pair_count(n));
}

TEST(Enumerate, ConnectedLabeledGraphs) {
    const std::vector<std::uint64_t> expected{1, 1, 4, 38, 728, 26704};
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(count(n, {true, 0, false}), expected[n - 1]) << n;
}

TEST(Enumerate, LabeledTreesMatchCayley) {
    for (std::size_t n = 2; n <= 7; ++n) {
        std::uint64_t c = 0;
        std::set<std::uint64_t> distinct;
        enumerate_graphs(n, {true, 1, true}, [&](const Graph& t) {
            ++c;
            EXPECT_TRUE(is_tree(t));
            std::uint64_t mask = 0;
            std::size_t bit = 0;
            for (Vertex j = 1; j < n; ++j)
                for (Vertex i = 0; i < j; ++i, ++bit)
                    if (t.adjacent(i, j)) mask |= std::uint64_t{1} << bit;
            distinct.insert(mask);
        });
        std::uint64_t cayley = 1;
        for (std::size_t i = 0; i + 2 < n; ++i) cayley *= n;
        EXPECT_EQ(c, cayley);
        EXPECT_EQ(distinct.size(), cayley);
    }
}

TEST(Enumerate, TreesAgreeWithMaskFilter) {
    std::uint64_t via_masks = 0;
    enumerate_graphs(6, {true, 0, false}, [&](const Graph& g) { via_masks += is_tree(g) ? 1 : 0; });
    EXPECT_EQ(via_masks, 1296u);
}

TEST(Enumerate, MinimumDegreeFilter) {
    std::uint64_t brute = 0;
    enumerate_graphs(5, {}, [&](const Graph& g) { brute += g.min_degree() >= 2 ? 1 : 0; });
    EXPECT_EQ(count(5, {false, 2, false}), brute);
}

TEST(Enumerate, ShardedRangesCoverUniverse) {
    const GraphFilter f{false, 1, false};
    const auto total = universe_size(5, f);
    std::uint64_t sum = 0;
    for (std::uint64_t lo = 0; lo < total; lo += 97) enumerate_graphs_range(5, f, lo, lo + 97, [&](const Graph&) { ++sum; });
    EXPECT_EQ(sum, count(5, f));
}

TEST(Enumerate, RegularLabeledCounts) {
    auto regular = [](std::size_t n, std::size_t r) {
        std::uint64_t c = 0;
        enumerate_regular_graphs(n, r, [&](const Graph& g) {
            EXPECT_TRUE(g.is_regular());
            EXPECT_EQ(g.max_degree(), r);
            ++c;
        });
        return c;
    };
    const std::vector<std::uint64_t> two_regular{1, 3, 12, 70, 465};
    for (std::size_t n = 3; n <= 7; ++n) EXPECT_EQ(regular(n, 2), two_regular[n - 3]) << n;
    EXPECT_EQ(regular(6, 3), 70u);
    EXPECT_EQ(regular(8, 3), 19355u);
    EXPECT_EQ(regular(5, 3), 0u);
    EXPECT_EQ(regular(4, 4), 0u);
    EXPECT_EQ(regular(1, 0), 1u);
}

TEST(Enumerate, OrderCap) {
    EXPECT_THROW(count(9, {}), CapExceeded);
    EXPECT_THROW(count(0, {}), CapExceeded);
}

TEST(Prufer, DecodesKnownSequences) {
    const Graph star = prufer_decode({0, 0, 0});
    EXPECT_EQ(star.degree(0), 4u);
    const Graph path = prufer_decode({1, 2});
    EXPECT_EQ(path, Graph::path(4));
    EXPECT_THROW(prufer_decode({5}), ConstructionError);
}

TEST(CanonicalKey, DistinguishesIsomorphismClasses) {
    std::set<std::uint64_t> classes;
    enumerate_graphs(4, {}, [&](const Graph& g) { classes.insert(canonical_key(g)); });
    EXPECT_EQ(classes.size(), 11u);
    std::set<std::uint64_t> connected5;
    enumerate_graphs(5, {true, 0, false}, [&](const Graph& g) { connected5.insert(canonical_key(g)); });
    EXPECT_EQ(connected5.size(), 21u);
}
