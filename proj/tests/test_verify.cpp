#include <gtest/gtest.h>

#include "domino/json.hpp"
#include "domino/verify.hpp"

using namespace domino;

TEST(Verify, EveryKnownCheckPassesAtSmallOrder) {
    for (const auto& t : known_theorems()) {
        VerifyOptions opt;
        opt.n_max = 5;
        opt.samples = 8;
        const Report r = verify_theorem(t.id, opt);
        EXPECT_TRUE(r.pass()) << t.id << ": " << (r.failures.empty() ? "" : r.failures.front().detail);
        EXPECT_GT(r.instances, 0u) << t.id;
        EXPECT_FALSE(r.universe.empty());
    }
    EXPECT_EQ(known_theorems().size(), 12u);
}

TEST(Verify, PerOrderCountsMatchKnownSequences) {
    VerifyOptions opt;
    opt.n_max = 5;
    const Report r = verify_theorem("eq1", opt);
    // labeled graphs without isolated vertices
    const std::vector<std::uint64_t> expected{1, 4, 41, 768};
    ASSERT_EQ(r.per_order.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_EQ(r.per_order[i].n, i + 2);
        EXPECT_EQ(r.per_order[i].instances, expected[i]);
    }
    EXPECT_EQ(r.instances, 814u);
    EXPECT_FALSE(r.seed.has_value());

    const Report trees = verify_theorem("thm-t2", opt);
    EXPECT_EQ(trees.instances, 1u + 3 + 16 + 125);
}

TEST(Verify, DeterministicAcrossJobCounts) {
    for (std::string_view id : {"thm-general", "cor-formula", "tower", "thm-domatic"}) {
        VerifyOptions one;
        one.n_max = 5;
        one.samples = 6;
        VerifyOptions three = one;
        three.jobs = 3;
        EXPECT_EQ(report_json(verify_theorem(id, one)).dump(), report_json(verify_theorem(id, three)).dump()) << id;
    }
}

TEST(Verify, SeedChangesRandomizedUniverse) {
    VerifyOptions a;
    a.n_max = 4;
    a.samples = 5;
    VerifyOptions b = a;
    b.seed = 99;
    const Report ra = verify_theorem("cor-formula", a);
    const Report rb = verify_theorem("cor-formula", b);
    EXPECT_EQ(ra.seed, default_verify_seed);
    EXPECT_EQ(rb.seed, 99u);
    EXPECT_TRUE(ra.pass());
    EXPECT_TRUE(rb.pass());
}

TEST(Verify, RejectsUnknownIdsAndLargeOrders) {
    EXPECT_THROW(verify_theorem("thm-unknown"), UndefinedParameter);
    VerifyOptions opt;
    opt.n_max = 9;
    EXPECT_THROW(verify_theorem("eq1", opt), CapExceeded);
    opt.n_max = 13;
    EXPECT_THROW(verify_theorem("cor-regular-full", opt), CapExceeded);
}

TEST(Verify, FailuresAreCappedAndCounted) {
    detail::ShardResult shard;
    const Graph g = Graph::cycle(4);
    for (int i = 0; i < 5; ++i) detail::record(shard, g, std::string("bad"), 2);
    detail::record(shard, g, std::nullopt, 2);
    Report r;
    std::vector<detail::ShardResult> shards{shard};
    detail::merge(r, shards, 4, 2);
    EXPECT_EQ(r.instances, 6u);
    EXPECT_EQ(r.failure_count, 5u);
    EXPECT_EQ(r.failures.size(), 2u);
    EXPECT_EQ(r.failures.front().graph6, emit_graph6(g));
    EXPECT_FALSE(r.pass());
}
