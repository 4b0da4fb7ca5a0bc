#include <gtest/gtest.h>

#include "domino/json.hpp"
#include "domino/random.hpp"

using namespace domino;

TEST(Json, CertificateRoundTrip) {
    const auto c = gamma_ktuple_bnb(Graph::cycle(7), 2);
    const Json j = certificate_json(c);
    EXPECT_EQ(j["schema"], "domino.certificate/1");
    EXPECT_EQ(j["bound_source"], "double-Slater");
    const auto back = certificate_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.value, c.value);
    EXPECT_EQ(back.set, c.set);
    EXPECT_EQ(back.source, c.source);
    EXPECT_EQ(back.method, c.method);
    EXPECT_EQ(certificate_json(back), j);
}

TEST(Json, SchemaMismatchIsRejected) {
    Json j = certificate_json(gamma_ktuple_bnb(Graph::cycle(5), 1));
    j["schema"] = "domino.certificate/2";
    EXPECT_THROW(certificate_from_json(j), Error);
    EXPECT_THROW(report_from_json(Json::object()), Error);
}

TEST(Json, SlaterReportRoundTrip) {
    for (const Graph& g : {Graph::cycle(6), Graph::path(5), Graph::empty(3), Graph::complete(5)}) {
        const Json j = slater_report_json(slater_report(g));
        EXPECT_EQ(slater_report_json(slater_report_from_json(j)), j);
    }
}

TEST(Json, DomaticAndFullnessRoundTrip) {
    const Graph g = Graph::cycle(6);
    const auto d = domatic_ktuple_exact(g, 1);
    const Json dj = domatic_json(d, g.order());
    const auto back = domatic_from_json(dj);
    EXPECT_EQ(back.value, d.value);
    EXPECT_EQ(back.parts, d.parts);

    FullnessReport r{3, 2, 3, true, full_structure_witness(Graph::complete(3))};
    const Json fj = fullness_json(r);
    EXPECT_EQ(fullness_json(fullness_from_json(fj)), fj);
    FullnessReport none{4, 2, 2, false, std::nullopt};
    EXPECT_EQ(fullness_json(fullness_from_json(fullness_json(none))), fullness_json(none));
}

TEST(Json, GadgetRoundTrip) {
    const CnfFormula f{2, {{1, -2, 2}, {-1, 2, 2}}};
    const Gadget gd = sat_gadget(f);
    const Json lj = gadget_labels_json(gd.labels, gd.graph.order(), f.clauses.size());
    EXPECT_EQ(gadget_labels_json(gadget_labels_from_json(lj), gd.graph.order(), f.clauses.size()), lj);
    const auto sol = gadget_gamma_x2(f, gd);
    const Json sj = gadget_solution_json(sol, f, gd.graph.order());
    EXPECT_EQ(gadget_solution_json(gadget_solution_from_json(sj), f, gd.graph.order()), sj);
    const CnfFormula blocked{2, {{1, 1, 1}, {-1, -1, -1}}};
    const Json bj = gadget_solution_json(gadget_gamma_x2(blocked), blocked, 42);
    EXPECT_TRUE(bj["set"].is_null());
    EXPECT_EQ(gadget_solution_json(gadget_solution_from_json(bj), blocked, 42), bj);
}

TEST(Json, ReportRoundTripAndTiming) {
    VerifyOptions opt;
    opt.n_max = 4;
    const Report r = verify_theorem("thm-t3", opt);
    const Json j = report_json(r);
    EXPECT_FALSE(j.contains("wall_ms"));
    EXPECT_TRUE(report_json(r, true).contains("wall_ms"));
    EXPECT_EQ(report_json(report_from_json(j)), j);
    Json tampered = j;
    tampered["pass"] = false;
    EXPECT_THROW(report_from_json(tampered), Error);
}
