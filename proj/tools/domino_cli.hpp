#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "domino/domatic.hpp"
#include "domino/domatic_families.hpp"
#include "domino/error.hpp"
#include "domino/gadget.hpp"
#include "domino/io.hpp"
#include "domino/json.hpp"
#include "domino/ktuple.hpp"
#include "domino/omega.hpp"
#include "domino/random.hpp"
#include "domino/slater.hpp"
#include "domino/verify.hpp"

namespace domino::cli {

enum ExitCode : int { ok = 0, domain_error = 1, usage_error = 2, verification_failure = 3 };

/// Thrown for bad flag values that CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Everything parsed from the command line.
struct CliConfig {
    std::string subcommand;
    std::string input = "-";
    std::string output = "-";
    std::size_t k = 2;
    std::size_t jobs = 1;
    std::uint64_t seed = default_verify_seed;
    std::size_t n_max = 6;
    std::size_t samples = 0;
    std::string format = "graph6";
    std::string method = "bnb";
    std::size_t node_budget = 0;
    bool timing = false;
    std::string labels;

    // gen
    std::string family;
    std::string params;
    std::uint64_t gen_seed = 0;
    std::size_t n = 0;
    std::size_t b = 1;
    std::size_t r = 2;
    std::size_t q = 2;
    std::size_t y = 4;
    std::size_t pairs = 2;
    std::size_t stars = 1;
    std::size_t parts = 3;
    std::size_t max_leaves = 3;
    std::vector<std::size_t> jumps;

    // verify
    std::string theorem;
};

/// Default for --jobs: DOMINO_JOBS when set, else 1.
inline std::size_t default_jobs() {
    const char* env = std::getenv("DOMINO_JOBS");
    if (env == nullptr || *env == '\0') return 1;
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 1) throw UsageError(fmt::format("DOMINO_JOBS must be a positive integer, got '{}'", env));
    return static_cast<std::size_t>(value);
}

inline std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError(fmt::format("cannot open input file '{}'", path));
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError(fmt::format("cannot open output file '{}'", path));
    file << text;
}

inline std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

inline std::string graph_text(const Graph& g, const std::string& format) {
    if (format == "graph6") return emit_graph6(g) + "\n";
    if (format == "edge-list") return emit_edge_list(g);
    throw UsageError(fmt::format("unknown graph format '{}' (graph6 or edge-list)", format));
}

inline Graph read_graph(const CliConfig& c, std::istream& in) { return parse_graph_auto(read_input(c.input, in)); }

inline std::vector<std::pair<std::size_t, std::size_t>> pairs_from(const Json& j) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw UsageError("expected a list of [a, b] pairs");
        out.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    }
    return out;
}

inline Json parse_params(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw UsageError(fmt::format("--params is not valid JSON: {}", e.what()));
    }
}

inline Graph generate(const CliConfig& c) {
    Rng rng(c.gen_seed);
    const std::string& f = c.family;
    if (f == "omega") {
        OmegaParams p;
        if (!c.params.empty()) {
            const Json j = parse_params(c.params);
            p.y_count = j.at("y_count").get<std::size_t>();
            p.matching = pairs_from(j.value("matching", Json::array()));
            p.end_vertices = j.at("end_vertices").get<std::vector<std::size_t>>();
            p.x_neighbors = pairs_from(j.value("x_neighbors", Json::array()));
        } else {
            p = random_omega_params(rng, c.y, c.y, c.max_leaves);
        }
        return build_omega(p).graph;
    }
    if (f == "omega-tree") {
        OmegaTreeParams p;
        if (!c.params.empty()) {
            const Json j = parse_params(c.params);
            p.pair_copies = j.at("pair_copies").get<std::size_t>();
            p.star_leaves = j.value("star_leaves", std::vector<std::size_t>{});
            p.connectors = pairs_from(j.value("connectors", Json::array()));
        } else {
            p = random_omega_tree_params(rng, c.pairs, c.stars, c.max_leaves);
        }
        return build_omega_tree(p);
    }
    if (f == "psi") return build_psi(c.k, c.r, c.q, c.gen_seed).graph;
    if (f == "theta") {
        ThetaParams p;
        if (!c.params.empty()) {
            const Json j = parse_params(c.params);
            for (const auto& g6 : j.at("parts")) p.parts.push_back(parse_graph6(g6.get<std::string>()));
            p.host = j.value("host", std::size_t{0});
            p.v = j.value("v", std::size_t{0});
            p.links = j.at("links").get<std::vector<std::size_t>>();
            p.extra_edges = pairs_from(j.value("extra_edges", Json::array()));
        } else {
            p = random_theta_params(rng, c.parts, 3, 0.5);
        }
        return build_theta(p).graph;
    }
    if (f == "remark1") return star_path_graph(c.b);
    if (f == "remark2") return spider_tree(c.b);
    if (f == "cycle") return Graph::cycle(c.n);
    if (f == "path") return Graph::path(c.n);
    if (f == "complete") return Graph::complete(c.n);
    if (f == "circulant") return Graph::circulant(c.n, c.jumps);
    throw UsageError(fmt::format("unknown family '{}'", f));
}

inline int execute(const CliConfig& c, std::istream& in, std::ostream& out) {
    const std::string& cmd = c.subcommand;
    if (cmd == "slater") {
        write_output(c.output, json_text(slater_report_json(slater_report(read_graph(c, in)))), out);
        return ok;
    }
    if (cmd == "gamma") {
        const Graph g = read_graph(c, in);
        DominationCertificate cert;
        if (c.method == "bnb") cert = gamma_ktuple_bnb(g, c.k, {c.node_budget});
        else if (c.method == "brute") cert = gamma_ktuple_bruteforce(g, c.k);
        else throw UsageError(fmt::format("unknown method '{}' (bnb or brute)", c.method));
        write_output(c.output, json_text(certificate_json(cert)), out);
        return ok;
    }
    if (cmd == "domatic") {
        const Graph g = read_graph(c, in);
        write_output(c.output, json_text(domatic_json(domatic_ktuple_exact(g, c.k), g.order())), out);
        return ok;
    }
    if (cmd == "full") {
        const Graph g = read_graph(c, in);
        FullnessReport r;
        r.order = g.order();
        r.min_degree = g.order() ? g.min_degree() : 0;
        r.domatic_number = domatic_ktuple_exact(g, 1).value;
        r.full = r.domatic_number == r.min_degree + 1;
        r.witness = full_structure_witness(g);
        write_output(c.output, json_text(fullness_json(r)), out);
        return ok;
    }
    if (cmd == "gen") {
        write_output(c.output, graph_text(generate(c), c.format), out);
        return ok;
    }
    if (cmd == "reduce") {
        const CnfFormula f = parse_dimacs_cnf(read_input(c.input, in));
        const Gadget gadget = sat_gadget(f);
        if (!c.labels.empty()) {
            std::ofstream file(c.labels, std::ios::binary);
            if (!file) throw UsageError(fmt::format("cannot open labels file '{}'", c.labels));
            file << json_text(gadget_labels_json(gadget.labels, gadget.graph.order(), f.clauses.size()));
        }
        write_output(c.output, graph_text(gadget.graph, c.format), out);
        return ok;
    }
    if (cmd == "gadget-solve") {
        const CnfFormula f = parse_dimacs_cnf(read_input(c.input, in));
        const Gadget gadget = sat_gadget(f);
        const GadgetSolution s = gadget_gamma_x2(f, gadget, c.jobs);
        write_output(c.output, json_text(gadget_solution_json(s, f, gadget.graph.order())), out);
        return ok;
    }
    if (cmd == "verify") {
        VerifyOptions opt;
        opt.n_max = c.n_max;
        opt.jobs = c.jobs;
        opt.seed = c.seed;
        opt.samples = c.samples;
        const Report r = verify_theorem(c.theorem, opt);
        write_output(c.output, json_text(report_json(r, c.timing)), out);
        return r.pass() ? ok : verification_failure;
    }
    if (cmd == "convert") {
        write_output(c.output, graph_text(read_graph(c, in), c.format), out);
        return ok;
    }
    throw UsageError("a subcommand is required");
}

/// Parses `args` (without the program name) and runs the subcommand.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CliConfig c;
    CLI::App app{"Double and k-tuple domination toolkit: exact solvers, Slater-type bounds, extremal families, "
                 "the 3-SAT gadget and exhaustive theorem checks.\n"
                 "Graphs are read as graph6 or edge lists (\"n m\" then m lines \"u v\"); '-' or no file means stdin.\n"
                 "Exit codes: 0 ok, 1 domain error, 2 usage error, 3 verification failure.",
                 "domino"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    try {
        c.jobs = default_jobs();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    auto add_io = [&](CLI::App* sub, const std::string& input_help) {
        sub->add_option("input", c.input, input_help)->capture_default_str();
        sub->add_option("-o,--output", c.output, "Output file ('-' = stdout)")->capture_default_str();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", c.format, "Graph output format")
            ->check(CLI::IsMember({"graph6", "edge-list"}))
            ->capture_default_str();
    };
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs", c.jobs, "Worker threads (default: DOMINO_JOBS or 1)")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    auto* slater = app.add_subcommand("slater", "Slater-type bounds of a graph as JSON");
    add_io(slater, "Graph file");

    auto* gamma = app.add_subcommand("gamma", "Minimum k-tuple dominating set with its lower-bound certificate");
    add_io(gamma, "Graph file");
    gamma->add_option("--k", c.k, "Tuple size k >= 1")->check(CLI::PositiveNumber)->capture_default_str();
    gamma->add_option("--method", c.method, "Solver")->check(CLI::IsMember({"bnb", "brute"}))->capture_default_str();
    gamma->add_option("--node-budget", c.node_budget, "Branch-and-bound node limit (0 = none)")->capture_default_str();

    auto* domatic = app.add_subcommand("domatic", "Maximum k-tuple domatic partition (n <= 12)");
    add_io(domatic, "Graph file");
    domatic->add_option("--k", c.k, "Tuple size k >= 1")->check(CLI::PositiveNumber);

    auto* full = app.add_subcommand("full", "Domatic fullness d = δ+1 with a structure witness (n <= 12)");
    add_io(full, "Graph file");

    auto* gen = app.add_subcommand("gen", "Build a family member and print it");
    gen->add_option("family", c.family, "omega | omega-tree | psi | theta | remark1 | remark2 | cycle | path | complete | circulant")
        ->required()
        ->check(CLI::IsMember({"omega", "omega-tree", "psi", "theta", "remark1", "remark2", "cycle", "path", "complete", "circulant"}));
    gen->add_option("-o,--output", c.output, "Output file ('-' = stdout)")->capture_default_str();
    add_format(gen);
    gen->add_option("--params", c.params, "Explicit parameters as JSON (omega, omega-tree, theta)");
    gen->add_option("--seed", c.gen_seed, "Seed for random parameters (psi: 0 = consecutive circulant jumps)")->capture_default_str();
    gen->add_option("--k", c.k, "psi: tuple size")->check(CLI::PositiveNumber)->capture_default_str();
    gen->add_option("--r", c.r, "psi: number of parts")->check(CLI::PositiveNumber)->capture_default_str();
    gen->add_option("--q", c.q, "psi: part order")->check(CLI::PositiveNumber)->capture_default_str();
    gen->add_option("--b", c.b, "remark1/remark2: gap parameter")->check(CLI::PositiveNumber)->capture_default_str();
    gen->add_option("--y", c.y, "omega: |Y| for random parameters")->capture_default_str();
    gen->add_option("--pairs", c.pairs, "omega-tree: P2-copies")->capture_default_str();
    gen->add_option("--stars", c.stars, "omega-tree: stars")->capture_default_str();
    gen->add_option("--max-leaves", c.max_leaves, "omega/omega-tree: most end-vertices per star")->capture_default_str();
    gen->add_option("--parts", c.parts, "theta: number of parts")->check(CLI::PositiveNumber)->capture_default_str();
    gen->add_option("--n", c.n, "cycle/path/complete/circulant: order");
    gen->add_option("--jumps", c.jumps, "circulant: jump lengths")->delimiter(',');

    auto* reduce = app.add_subcommand("reduce", "Build the double-domination gadget of a 3-CNF (DIMACS)");
    add_io(reduce, "DIMACS CNF file");
    reduce->add_option("--labels", c.labels, "Write the vertex-role JSON sidecar here");
    add_format(reduce);

    auto* solve = app.add_subcommand("gadget-solve", "Decide γ×2 = 2a for the gadget of a 3-CNF (DIMACS)");
    add_io(solve, "DIMACS CNF file");
    add_jobs(solve);

    auto* verify = app.add_subcommand("verify", "Run a theorem check and write a JSON report");
    std::vector<std::string> ids;
    for (const auto& t : known_theorems()) ids.emplace_back(t.id);
    verify->add_option("id", c.theorem, "Check id")->required()->check(CLI::IsMember(ids));
    verify->add_option("-o,--output", c.output, "Report file ('-' = stdout)")->capture_default_str();
    verify->add_option("--n-max", c.n_max, "Largest order (or factor order for randomized checks)")->capture_default_str();
    add_jobs(verify);
    verify->add_option("--seed", c.seed, "Seed for randomized checks")->capture_default_str();
    verify->add_option("--samples", c.samples, "Randomized instances (0 = default)")->capture_default_str();
    verify->add_flag("--timing", c.timing, "Include wall time in the report");

    auto* convert = app.add_subcommand("convert", "Convert between graph6 and edge lists");
    add_io(convert, "Graph file");
    add_format(convert);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run 'domino --help' for the grammar\n";
        return usage_error;
    }
    for (auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();
    if (c.subcommand == "domatic" && app.get_subcommand("domatic")->count("--k") == 0) c.k = 1;

    try {
        return execute(c, in, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return domain_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return domain_error;
    } catch (const Json::exception& e) {
        err << "error: bad parameters: " << e.what() << "\n";
        return usage_error;
    }
}

} // namespace domino::cli
