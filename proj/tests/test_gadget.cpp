#include <gtest/gtest.h>

#include "domino/gadget.hpp"
#include "domino/ktuple.hpp"
#include "domino/random.hpp"
#include "oracles.hpp"

using namespace domino;

namespace {

CnfFormula four_variable_formula() {
    return {4, {{1, 2, -3}, {4, -2, -1}, {3, 4, -2}, {-4, -3, -1}}};
}

// Every clause over a single variable, with both polarities present.
CnfFormula unsat_two_variable_core() {
    return {2, {{1, 2, 2}, {1, -2, -2}, {-1, 2, 2}, {-1, -2, -2}}};
}

} // namespace

TEST(Dimacs, ParsesAndRoundTrips) {
    const CnfFormula f = parse_dimacs_cnf("c comment\np cnf 2 1\n1 2 -2 0\n");
    ASSERT_EQ(f.clauses.size(), 1u);
    EXPECT_EQ(f.clauses[0], (std::array<int, 3>{1, 2, -2}));
    const CnfFormula multi = parse_dimacs_cnf("p cnf 3 2\n1 2\n3 0 -1 -2\n-3 0\n%\n0\n");
    EXPECT_EQ(multi.clauses.size(), 2u);
    const CnfFormula fig = four_variable_formula();
    const CnfFormula back = parse_dimacs_cnf(emit_dimacs_cnf(fig));
    EXPECT_EQ(back.variables, fig.variables);
    EXPECT_EQ(back.clauses, fig.clauses);
}

TEST(Dimacs, ErrorsCarryLineNumbers) {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_dimacs_cnf(text);
        } catch (const ParseError& e) {
            EXPECT_EQ(e.unit(), ParseError::Unit::line);
            return e.position();
        }
        return 999;
    };
    EXPECT_EQ(line_of("p cnf 2 1\n1 2 0\n"), 2u);       // two literals
    EXPECT_EQ(line_of("p cnf 2 1\n1 2 3 0\n"), 2u);     // variable out of range
    EXPECT_EQ(line_of("1 2 3 0\n"), 1u);                // no header
    EXPECT_EQ(line_of("p cnf 3 2\n1 2 3 0\n"), 2u);     // clause count
    EXPECT_EQ(line_of("p cnf 3 1\n1 2 x 0\n"), 2u);     // bad token
    EXPECT_EQ(line_of("p cnf 3 1\n\n1 2\n3\n"), 3u);    // unterminated
    std::string six = "p cnf 3 6\n";
    for (int i = 0; i < 6; ++i) six += "1 2 3 0\n";
    EXPECT_EQ(line_of(six), 0u);  // occurrence cap
}

TEST(Gadget, AttachmentCounts) {
    EXPECT_EQ(clause_attachment_count({1, 2, -3}), 6u);
    EXPECT_EQ(clause_attachment_count({1, -1, 2}), 5u);
    EXPECT_EQ(clause_attachment_count({1, 1, 1}), 2u);
    EXPECT_EQ(clause_attachment_count({1, 1, -1}), 3u);
}

TEST(Gadget, FourVariableInstance) {
    const CnfFormula f = four_variable_formula();
    const Gadget gd = sat_gadget(f);
    const Graph& g = gd.graph;
    const GadgetLabels& L = gd.labels;
    EXPECT_EQ(g.order(), 324u);
    EXPECT_EQ(L.double_slater, 8u);
    EXPECT_EQ(double_slater(degree_profile(g)), 8u);
    EXPECT_TRUE(is_proper_coloring(g, L.color));
    for (auto c : L.color) EXPECT_LT(c, 4);

    VertexSet caption(g.order(), {L.q[0], L.q_double[0], L.q_prime[1], L.q_double[1], L.q[2], L.q_double[2],
                                  L.q_prime[3], L.q_double[3]});
    EXPECT_TRUE(is_ktuple_dominating(g, caption, 2));
    EXPECT_TRUE(satisfies(f, {true, false, true, false}));

    const GadgetSolution sol = gadget_gamma_x2(f, gd);
    EXPECT_TRUE(sol.attains);
    EXPECT_EQ(sol.set.count(), 8u);
    EXPECT_TRUE(is_ktuple_dominating(g, sol.set, 2));

    const auto cert = gamma_ktuple_bnb(g, 2);
    EXPECT_EQ(cert.value, 8u);
    EXPECT_EQ(cert.source, BoundSource::double_slater);
}

TEST(Gadget, LayoutAndDegrees) {
    const CnfFormula f{2, {{1, -2, 2}}};
    const Gadget gd = sat_gadget(f);
    EXPECT_EQ(gd.graph.order(), 41u);
    const GadgetLabels& L = gd.labels;
    EXPECT_EQ(L.block_order, 20u);
    EXPECT_EQ(L.clause, std::vector<Vertex>{40});
    for (std::size_t i = 0; i < 2; ++i)
        for (Vertex w = L.independent_begin(i); w < L.independent_end(i); ++w) {
            EXPECT_EQ(gd.graph.degree(w), 3u);
            EXPECT_TRUE(gd.graph.adjacent(w, L.q_double[i]));
        }
    EXPECT_EQ(gd.graph.degree(40), 5u);  // q1, q1'', q2, q2', q2''
}

TEST(Gadget, SingleVariableClausesBlockTheTwoAPattern) {
    const CnfFormula f{2, {{1, 1, 1}, {-1, -1, -1}}};
    const Gadget gd = sat_gadget(f);
    const GadgetSolution sol = gadget_gamma_x2(f, gd);
    EXPECT_FALSE(sol.attains);
    EXPECT_EQ(sol.candidates, 9u);
    EXPECT_GT(gamma_ktuple_bnb(gd.graph, 2).value, 4u);

    const CnfFormula one{1, {{1, 1, 1}}};
    EXPECT_TRUE(gadget_gamma_x2(one).attains);
}

TEST(Gadget, SatisfiableFormulasAttainTwoA) {
    Rng rng(71);
    for (int i = 0; i < 40; ++i) {
        const CnfFormula f = random_cnf(rng, uniform_index(rng, 1, 6), uniform_index(rng, 1, 12), false);
        if (!oracle::satisfiable(f)) continue;
        const GadgetSolution sol = gadget_gamma_x2(f);
        EXPECT_TRUE(sol.attains) << emit_dimacs_cnf(f);
    }
}

TEST(Gadget, DistinctVariableClausesGiveSlaterTwoA) {
    Rng rng(73);
    for (int i = 0; i < 30; ++i) {
        const std::size_t a = uniform_index(rng, 3, 6);
        const CnfFormula f = random_cnf(rng, a, uniform_index(rng, 1, 5 * a / 3), true);
        const Gadget gd = sat_gadget(f);
        EXPECT_EQ(gd.labels.double_slater, 2 * a);
        EXPECT_TRUE(is_proper_coloring(gd.graph, gd.labels.color));
    }
}

TEST(Gadget, SpecializedSolverMatchesBranchAndBound) {
    Rng rng(79);
    for (int i = 0; i < 25; ++i) {
        const std::size_t a = uniform_index(rng, 1, 2);
        const CnfFormula f = random_cnf(rng, a, uniform_index(rng, 1, 4), false);
        const Gadget gd = sat_gadget(f);
        const GadgetSolution sol = gadget_gamma_x2(f, gd);
        const auto value = gamma_ktuple_bnb(gd.graph, 2).value;
        EXPECT_EQ(sol.attains, value == 2 * a) << emit_dimacs_cnf(f);
        EXPECT_GE(value, 2 * a);
    }
}

TEST(Gadget, DeterministicAcrossJobs) {
    Rng rng(83);
    for (int i = 0; i < 10; ++i) {
        const CnfFormula f = random_cnf(rng, 5, 8, false);
        const Gadget gd = sat_gadget(f);
        const auto one = gadget_gamma_x2(f, gd, 1);
        const auto four = gadget_gamma_x2(f, gd, 4);
        EXPECT_EQ(one.attains, four.attains);
        EXPECT_EQ(one.candidates, four.candidates);
        if (one.attains) {
            EXPECT_EQ(one.set, four.set);
        }
    }
}

// Choosing {q_i, q_i''} in every block double dominates each clause vertex
// whose clause mentions two distinct variables, whatever the signs. An
// unsatisfiable formula therefore still reaches 2a.
TEST(Gadget, UnsatisfiableFormulaStillAttainsTwoA) {
    const CnfFormula f = unsat_two_variable_core();
    EXPECT_FALSE(oracle::satisfiable(f));
    const Gadget gd = sat_gadget(f);
    const GadgetSolution sol = gadget_gamma_x2(f, gd);
    EXPECT_TRUE(sol.attains);
    EXPECT_FALSE(satisfies(f, sol.assignment));
    EXPECT_EQ(gamma_ktuple_bnb(gd.graph, 2).value, 4u);
}
