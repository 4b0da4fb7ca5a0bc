#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "domino/degree.hpp"
#include "domino/error.hpp"
#include "domino/graph.hpp"
#include "domino/ktuple.hpp"
#include "domino/slater.hpp"

namespace domino {

inline constexpr std::size_t max_variable_occurrences = 5;

/// 3-CNF formula. Literal +i is u_i and -i its complement (1-based, as in
/// DIMACS). A clause always has three literal slots; repeats are allowed.
struct CnfFormula {
    std::size_t variables = 0;
    std::vector<std::array<int, 3>> clauses;
};

/// Throws ParseError(line 0) when a literal is out of range or a variable
/// occurs in more than five clauses.
inline void validate(const CnfFormula& f) {
    std::vector<std::size_t> occurrences(f.variables + 1, 0);
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        std::set<std::size_t> vars;
        for (int lit : f.clauses[j]) {
            const auto var = static_cast<std::size_t>(std::abs(lit));
            if (lit == 0 || var > f.variables)
                throw ParseError(fmt::format("clause {}: literal {} out of range 1..{}", j + 1, lit, f.variables), 0,
                                 ParseError::Unit::line);
            vars.insert(var);
        }
        for (std::size_t var : vars)
            if (++occurrences[var] > max_variable_occurrences)
                throw ParseError(fmt::format("variable {} occurs in more than {} clauses", var, max_variable_occurrences), 0,
                                 ParseError::Unit::line);
    }
}

/// DIMACS CNF with exactly three literals per clause. Clauses may span
/// lines; 'c' lines are comments; a trailing '%' line is ignored.
inline CnfFormula parse_dimacs_cnf(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t declared_clauses = 0;
    CnfFormula f;
    std::vector<int> pending;
    std::size_t pending_line = 0;

    auto fail = [&](std::size_t at, const std::string& msg) {
        return ParseError(fmt::format("DIMACS line {}: {}", at, msg), at, ParseError::Unit::line);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok[0] == 'c') continue;
        if (tok == "%") break;
        if (tok == "p") {
            std::string fmt_name;
            long long vars = -1;
            long long clauses = -1;
            if (have_header || !(ls >> fmt_name >> vars >> clauses) || fmt_name != "cnf" || vars < 0 || clauses < 0)
                throw fail(line_no, "malformed problem line (expected 'p cnf <vars> <clauses>')");
            have_header = true;
            f.variables = static_cast<std::size_t>(vars);
            declared_clauses = static_cast<std::size_t>(clauses);
            continue;
        }
        if (!have_header) throw fail(line_no, "clause before the problem line");
        do {
            char* end = nullptr;
            const long lit = std::strtol(tok.c_str(), &end, 10);
            if (end == tok.c_str() || *end != '\0') throw fail(line_no, fmt::format("bad literal '{}'", tok));
            if (lit == 0) {
                if (pending.size() != 3)
                    throw fail(pending_line ? pending_line : line_no,
                               fmt::format("clause has {} literals; exactly 3 are required", pending.size()));
                f.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
                pending_line = 0;
                continue;
            }
            if (static_cast<std::size_t>(std::labs(lit)) > f.variables)
                throw fail(line_no, fmt::format("literal {} exceeds the declared {} variables", lit, f.variables));
            if (pending.empty()) pending_line = line_no;
            pending.push_back(static_cast<int>(lit));
        } while (ls >> tok);
    }
    if (!have_header) throw fail(line_no, "missing problem line");
    if (!pending.empty()) throw fail(pending_line, "unterminated clause (missing 0)");
    if (f.clauses.size() != declared_clauses)
        throw fail(line_no, fmt::format("declared {} clauses but found {}", declared_clauses, f.clauses.size()));
    validate(f);
    return f;
}

inline std::string emit_dimacs_cnf(const CnfFormula& f) {
    std::string out = fmt::format("p cnf {} {}\n", f.variables, f.clauses.size());
    for (const auto& c : f.clauses) out += fmt::format("{} {} {} 0\n", c[0], c[1], c[2]);
    return out;
}

/// Vertex roles in the gadget graph. Variable i (0-based) owns the block
/// i*5a^2 .. (i+1)*5a^2 - 1: its triangle q_i, q_i', q_i'' first, then the
/// independent vertices. Clause vertices follow all blocks.
struct GadgetLabels {
    std::size_t variables = 0;
    std::size_t block_order = 0;  ///< 5a^2
    std::vector<Vertex> q;
    std::vector<Vertex> q_prime;
    std::vector<Vertex> q_double;
    std::vector<Vertex> clause;
    std::vector<std::uint8_t> color;  ///< proper 4-coloring
    std::size_t double_slater = 0;

    Vertex independent_begin(std::size_t i) const { return i * block_order + 3; }
    Vertex independent_end(std::size_t i) const { return (i + 1) * block_order; }
};

struct Gadget {
    Graph graph;
    GadgetLabels labels;
};

/// Number of distinct gadget vertices a clause vertex is joined to.
inline std::size_t clause_attachment_count(const std::array<int, 3>& clause) {
    std::set<int> endpoints;
    for (int lit : clause) {
        endpoints.insert(3 * std::abs(lit));                       // q''
        endpoints.insert(3 * std::abs(lit) + (lit > 0 ? 1 : 2));  // q or q'
    }
    return endpoints.size();
}

inline bool is_proper_coloring(const Graph& g, const std::vector<std::uint8_t>& color) {
    if (color.size() != g.order()) return false;
    for (auto [u, v] : g.edges())
        if (color[u] == color[v]) return false;
    return true;
}

/// Builds the gadget graph of order 5a^3 + b. Each variable contributes a
/// triangle q, q', q'' with 5a^2 - 3 further vertices adjacent to all three;
/// clause vertex c_j is joined to q_i'' and to q_i (literal u_i) or q_i'
/// (literal u_i') for each of its literals.
inline Gadget sat_gadget(const CnfFormula& f) {
    validate(f);
    const std::size_t a = f.variables;
    if (a == 0) throw ConstructionError("gadget needs at least one variable");
    const std::size_t block = 5 * a * a;
    const std::size_t n = a * block + f.clauses.size();

    Gadget out;
    GadgetLabels& L = out.labels;
    L.variables = a;
    L.block_order = block;
    L.color.assign(n, 3);
    Graph::Builder b(n);
    for (std::size_t i = 0; i < a; ++i) {
        const Vertex base = i * block;
        L.q.push_back(base);
        L.q_prime.push_back(base + 1);
        L.q_double.push_back(base + 2);
        for (Vertex t = 0; t < 3; ++t) L.color[base + t] = static_cast<std::uint8_t>(t);
        b.add_edge(base, base + 1);
        b.add_edge(base + 1, base + 2);
        b.add_edge(base, base + 2);
        for (Vertex w = base + 3; w < base + block; ++w)
            for (Vertex t = 0; t < 3; ++t) b.add_edge(w, base + t);
    }
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const Vertex c = a * block + j;
        L.clause.push_back(c);
        for (int lit : f.clauses[j]) {
            const auto i = static_cast<std::size_t>(std::abs(lit)) - 1;
            b.add_edge(c, L.q_double[i]);  // repeated literals collapse
            b.add_edge(c, lit > 0 ? L.q[i] : L.q_prime[i]);
        }
    }
    out.graph = std::move(b).build();
    if (!is_proper_coloring(out.graph, L.color)) throw Error("gadget 4-coloring is not proper");

    L.double_slater = double_slater(degree_profile(out.graph));
    bool wide_clauses = true;
    for (const auto& c : f.clauses)
        if (clause_attachment_count(c) < 5) wide_clauses = false;
    if (wide_clauses && L.double_slater != 2 * a)
        throw Error(fmt::format("gadget double Slater number {} differs from 2a = {}", L.double_slater, 2 * a));
    return out;
}

/// Outcome of deciding γ×2(gadget) = 2a.
struct GadgetSolution {
    bool attains = false;          ///< γ×2 = 2a
    VertexSet set;                 ///< a double dominating set of size 2a when attains
    std::vector<bool> assignment;  ///< u_i true iff q_i is in the set
    std::uint64_t candidates = 0;  ///< candidates up to and including the accepted one
};

/// Decides whether the gadget has a double dominating set of size 2a.
///
/// Every block needs two vertices of such a set; with exactly two per
/// block both must lie on the triangle, since a second independent vertex
/// outside the set would otherwise see only one set member. So the 3^a
/// choices of a triangle pair per block are the only candidates. Candidate
/// c assigns block i the pair (c / 3^i) mod 3: 0 = {q, q''}, 1 = {q', q''},
/// 2 = {q, q'}. The lowest accepted candidate is returned, so the result
/// does not depend on `jobs`.
inline GadgetSolution gadget_gamma_x2(const CnfFormula& f, const Gadget& gadget, std::size_t jobs = 1) {
    const std::size_t a = f.variables;
    const GadgetLabels& L = gadget.labels;
    const Graph& g = gadget.graph;
    if (a > 30) throw CapExceeded(fmt::format("gadget enumeration supports a <= 30, got {}", a));
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < a; ++i) total *= 3;

    auto candidate = [&](std::uint64_t c) {
        VertexSet s(g.order());
        for (std::size_t i = 0; i < a; ++i, c /= 3) {
            const auto choice = c % 3;
            if (choice != 1) s.set(L.q[i]);
            if (choice != 0) s.set(L.q_prime[i]);
            if (choice != 2) s.set(L.q_double[i]);
        }
        return s;
    };

    std::atomic<std::uint64_t> best{total};
    auto scan = [&](std::size_t worker, std::size_t workers) {
        for (std::uint64_t c = worker; c < total && c < best.load(); c += workers)
            if (is_ktuple_dominating(g, candidate(c), 2)) {
                std::uint64_t cur = best.load();
                while (c < cur && !best.compare_exchange_weak(cur, c)) {}
                return;
            }
    };
    jobs = std::max<std::size_t>(1, std::min<std::uint64_t>(jobs, total));
    if (jobs == 1) {
        scan(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(scan, w, jobs);
        for (auto& t : pool) t.join();
    }

    GadgetSolution sol;
    const std::uint64_t found = best.load();
    sol.candidates = found == total ? total : found + 1;
    if (found == total) return sol;
    sol.attains = true;
    sol.set = candidate(found);
    sol.assignment.resize(a);
    for (std::size_t i = 0; i < a; ++i) sol.assignment[i] = sol.set.test(L.q[i]);
    return sol;
}

inline GadgetSolution gadget_gamma_x2(const CnfFormula& f, std::size_t jobs = 1) {
    return gadget_gamma_x2(f, sat_gadget(f), jobs);
}

/// Truth assignment satisfies every clause.
inline bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
    for (const auto& c : f.clauses) {
        bool sat = false;
        for (int lit : c) {
            const bool value = assignment.at(static_cast<std::size_t>(std::abs(lit)) - 1);
            if ((lit > 0) == value) sat = true;
        }
        if (!sat) return false;
    }
    return true;
}

} // namespace domino
