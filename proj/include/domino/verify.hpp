#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "domino/corona.hpp"
#include "domino/degree.hpp"
#include "domino/domatic.hpp"
#include "domino/domatic_families.hpp"
#include "domino/enumerate.hpp"
#include "domino/error.hpp"
#include "domino/io.hpp"
#include "domino/ktuple.hpp"
#include "domino/omega.hpp"
#include "domino/orientation.hpp"
#include "domino/random.hpp"
#include "domino/slater.hpp"
#include "domino/traversal.hpp"

namespace domino {

inline constexpr std::uint64_t default_verify_seed = 20240601;

struct VerifyOptions {
    std::size_t n_max = 6;
    std::size_t jobs = 1;
    std::uint64_t seed = default_verify_seed;
    std::size_t samples = 0;  ///< randomized checks; 0 selects the per-check default
    std::size_t max_failures = 20;
};

struct VerifyFailure {
    std::string graph6;
    std::string detail;
};

struct OrderCount {
    std::size_t n = 0;
    std::uint64_t instances = 0;
};

struct Report {
    std::string id;
    std::string universe;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::optional<std::uint64_t> seed;  ///< set for randomized universes
    std::vector<OrderCount> per_order;
    std::uint64_t instances = 0;
    std::uint64_t failure_count = 0;
    std::vector<VerifyFailure> failures;  ///< first max_failures, in universe order
    double wall_ms = 0;

    bool pass() const { return failure_count == 0; }
};

/// A check returns a failure description or nothing.
using GraphCheck = std::function<std::optional<std::string>(const Graph&)>;

struct TheoremInfo {
    std::string_view id;
    std::string_view statement;
};

inline const std::vector<TheoremInfo>& known_theorems() {
    static const std::vector<TheoremInfo> list{
        {"eq1", "γ×2 >= sℓ×2 for graphs without isolated vertices"},
        {"prop21", "⌈2n/(1+Δ)⌉ <= sℓ×2 <= ⌈2n/(1+δ)⌉ for δ >= 2"},
        {"prop22", "gap, range and equality biconditionals for sℓ×2 when δ >= 2"},
        {"thm-general", "γ×2 >= (4n-2m+e-p)/3 with equality iff the graph has the Ω structure"},
        {"thm-t2", "3γ×2(T) >= 2n + ℓ - s + 2 for nontrivial trees"},
        {"thm-t3", "3γ×2 >= 2n + e - p + 2 - 2k for connected graphs, k = m - n + 1"},
        {"thm-t4", "γ×2 >= sℓ×2 >= (4n-2m+e-p)/3 with the degree-sequence equality test"},
        {"cor-formula", "γ×k(G⊙H) = |V(G)|(γ×(k-1)(H) + 1) for k in {2,3}"},
        {"tower", "γ×k(H_k) = γ(H) + k - 1, diam(H_k) <= 2, transitive orientations extend"},
        {"thm-domatic", "domatic upper bound for k in {1,2} with equality structure and Ψ members"},
        {"thm-full", "d = δ+1 iff a Θ witness partition exists"},
        {"cor-regular-full", "a regular graph is full iff it splits into parts pairwise joined by perfect matchings"},
    };
    return list;
}

namespace detail {

struct Job {
    Graph graph;
    std::function<std::optional<std::string>()> check;
};

struct ShardResult {
    std::uint64_t instances = 0;
    std::uint64_t failure_count = 0;
    std::vector<VerifyFailure> failures;
};

inline void run_shards(std::size_t shards, std::size_t jobs, const std::function<void(std::size_t, ShardResult&)>& work,
                       std::vector<ShardResult>& results) {
    results.assign(shards, {});
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t s = next++; s < shards; s = next++) work(s, results[s]);
    };
    jobs = std::max<std::size_t>(1, std::min(jobs, shards));
    if (jobs == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (std::size_t t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
            try {
                worker();
            } catch (...) {
                errors[t] = std::current_exception();
                next = shards;
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

inline void record(ShardResult& r, const Graph& g, std::optional<std::string> failure, std::size_t cap) {
    ++r.instances;
    if (!failure) return;
    ++r.failure_count;
    if (r.failures.size() < cap) r.failures.push_back({emit_graph6(g), std::move(*failure)});
}

inline void merge(Report& report, std::vector<ShardResult>& shards, std::size_t n, std::size_t cap) {
    OrderCount row{n, 0};
    for (auto& s : shards) {
        row.instances += s.instances;
        report.failure_count += s.failure_count;
        for (auto& f : s.failures)
            if (report.failures.size() < cap) report.failures.push_back(std::move(f));
    }
    report.instances += row.instances;
    report.per_order.push_back(row);
}

/// Every labeled graph of each order in [n_min, n_max] passing the filter.
inline void run_exhaustive(Report& report, const VerifyOptions& opt, std::size_t n_min, const GraphFilter& filter,
                           const GraphCheck& check) {
    report.n_min = n_min;
    report.n_max = opt.n_max;
    for (std::size_t n = n_min; n <= opt.n_max; ++n) {
        const std::uint64_t total = universe_size(n, filter);
        const std::size_t shards = static_cast<std::size_t>(std::min<std::uint64_t>(total, 64 * std::max<std::size_t>(opt.jobs, 1)));
        std::vector<ShardResult> results;
        run_shards(shards, opt.jobs,
                   [&](std::size_t s, ShardResult& r) {
                       const std::uint64_t lo = total * s / shards;
                       const std::uint64_t hi = total * (s + 1) / shards;
                       enumerate_graphs_range(n, filter, lo, hi,
                                              [&](const Graph& g) { record(r, g, check(g), opt.max_failures); });
                   },
                   results);
        merge(report, results, n, opt.max_failures);
    }
}

/// Pre-generated instances grouped by order; evaluated in parallel, merged in order.
inline void run_jobs(Report& report, const VerifyOptions& opt, std::vector<Job>& jobs) {
    std::stable_sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.graph.order() < b.graph.order(); });
    std::size_t i = 0;
    while (i < jobs.size()) {
        std::size_t j = i;
        while (j < jobs.size() && jobs[j].graph.order() == jobs[i].graph.order()) ++j;
        std::vector<ShardResult> results;
        run_shards(j - i, opt.jobs,
                   [&](std::size_t s, ShardResult& r) {
                       const Job& job = jobs[i + s];
                       record(r, job.graph, job.check(), opt.max_failures);
                   },
                   results);
        merge(report, results, jobs[i].graph.order(), opt.max_failures);
        i = j;
    }
    report.seed = opt.seed;
}

inline std::size_t gamma2(const Graph& g) { return gamma_ktuple_bruteforce(g, 2).value; }

inline std::string edge_bound_text(const DegreeProfile& p) {
    return fmt::format("n={} m={} e={} p={}", p.n, p.m, p.end_vertices, p.penultimate);
}

inline std::optional<std::string> check_eq1(const Graph& g) {
    const auto sl2 = double_slater(degree_profile(g));
    const auto gamma = gamma2(g);
    if (gamma < sl2) return fmt::format("γ×2={} < sℓ×2={}", gamma, sl2);
    return std::nullopt;
}

inline std::optional<std::string> check_prop21(const Graph& g) {
    const auto p = degree_profile(g);
    const auto sl2 = double_slater(p);
    const auto b = regular_bounds(p);
    if (sl2 < b.lower || sl2 > b.upper) return fmt::format("sℓ×2={} outside [{}, {}]", sl2, b.lower, b.upper);
    return std::nullopt;
}

inline std::optional<std::string> check_prop22(const Graph& g) {
    const auto c = slater_gap_checks(g);
    if (c.all_hold()) return std::nullopt;
    return fmt::format(
        "sℓ={} sℓ×2={} gap_ok={} range_ok={} [sℓ×2=2:{} two-universal:{}] [sℓ×2=n:{} m-small:{}] [lower-met:{} "
        "divisible+top-degree:{}]",
        c.sl, c.sl2, c.gap_within_bounds, c.range_holds, c.sl2_is_two, c.two_universal_vertices, c.sl2_is_n,
        c.size_small, c.sl2_meets_lower, c.divisible_and_top_degree);
}

inline std::optional<std::string> check_general(const Graph& g) {
    const auto p = degree_profile(g);
    const Fraction bound = edge_count_bound(p);
    const auto gamma = static_cast<std::int64_t>(gamma2(g));
    if (gamma < bound.ceil()) return fmt::format("γ×2={} below bound {}/{} ({})", gamma, bound.num, bound.den, edge_bound_text(p));
    const bool equal = bound.is_integer() && bound.num == gamma;
    const auto witness = recognize_omega(g);
    if (equal != witness.has_value())
        return fmt::format("γ×2={} bound={}/{} equality={} but Ω structure {}", gamma, bound.num, bound.den, equal,
                           witness ? "found" : "absent");
    if (witness) {
        if (!is_ktuple_dominating(g, witness->dominating, 2) ||
            static_cast<std::int64_t>(witness->dominating.count()) != gamma)
            return fmt::format("Ω witness of size {} is not a minimum double dominating set", witness->dominating.count());
    }
    return std::nullopt;
}

inline std::optional<std::string> check_t2(const Graph& t) {
    const auto p = degree_profile(t);
    const auto gamma = gamma2(t);
    if (3 * gamma + p.penultimate < 2 * p.n + p.end_vertices + 2)
        return fmt::format("3γ×2={} < 2n+ℓ-s+2={}", 3 * gamma,
                           static_cast<std::int64_t>(2 * p.n + p.end_vertices + 2) - static_cast<std::int64_t>(p.penultimate));
    return std::nullopt;
}

inline std::optional<std::string> check_t3(const Graph& g) {
    const auto p = degree_profile(g);
    const auto cycles = static_cast<std::int64_t>(p.m) - static_cast<std::int64_t>(p.n) + 1;
    const auto gamma = static_cast<std::int64_t>(gamma2(g));
    const auto rhs = 2 * static_cast<std::int64_t>(p.n) + static_cast<std::int64_t>(p.end_vertices) -
                     static_cast<std::int64_t>(p.penultimate) + 2 - 2 * cycles;
    if (3 * gamma < rhs) return fmt::format("3γ×2={} < 2n+e-p+2-2k={} (k={})", 3 * gamma, rhs, cycles);
    return std::nullopt;
}

inline std::optional<std::string> check_t4(const Graph& g) {
    const auto p = degree_profile(g);
    const auto sl2 = static_cast<std::int64_t>(double_slater(p));
    const auto gamma = static_cast<std::int64_t>(gamma2(g));
    const Fraction bound = edge_count_bound(p);
    if (gamma < sl2) return fmt::format("γ×2={} < sℓ×2={}", gamma, sl2);
    if (sl2 < bound.ceil()) return fmt::format("sℓ×2={} < ⌈{}/{}⌉ ({})", sl2, bound.num, bound.den, edge_bound_text(p));
    const bool attained = bound.is_integer() && bound.num == sl2;
    const bool predicate = edge_count_bound_attained(p);
    if (attained != predicate)
        return fmt::format("sℓ×2={} bound={}/{}: equality={} but degree test={} ({})", sl2, bound.num, bound.den, attained,
                           predicate, edge_bound_text(p));
    return std::nullopt;
}

inline std::optional<std::string> check_domatic(const Graph& g, std::size_t k) {
    const auto d = domatic_ktuple_exact(g, k);
    const auto gamma = gamma_ktuple_bruteforce(g, k).value;
    const auto form = domatic_quadratic_form(d.value, g.order(), g.size(), k, gamma);
    if (form < 0) return fmt::format("k={}: d×k={} γ×k={} violates the bound (form={})", k, d.value, gamma, form);
    if (form != 0) return std::nullopt;
    // Equality forces the Ψ shape on every maximum partition.
    const std::size_t r = d.value;
    if (!g.is_regular() || g.max_degree() + 1 != k * r || g.order() != r * gamma)
        return fmt::format("k={}: equality with d×k={} γ×k={} on a graph that is not ({}r-1)-regular of order rγ", k, r,
                           gamma, k);
    for (std::size_t i = 0; i < r; ++i) {
        bool ok = true;
        d.parts[i].for_each([&](Vertex x) {
            for (std::size_t j = 0; j < r; ++j) {
                const std::size_t want = i == j ? k - 1 : k;
                if (g.neighbors(x).intersection_count(d.parts[j]) != want) ok = false;
            }
        });
        if (!ok) return fmt::format("k={}: equality but part {} is not (k-1)-regular with k neighbors per other part", k, i);
    }
    return std::nullopt;
}

inline std::optional<std::string> check_full(const Graph& g) {
    const auto d = domatic_ktuple_exact(g, 1).value;
    if (d > g.min_degree() + 1) return fmt::format("d={} exceeds δ+1={}", d, g.min_degree() + 1);
    const bool full = d == g.min_degree() + 1;
    const auto w = full_structure_witness(g);
    if (full != w.has_value()) return fmt::format("d={} δ={} full={} but Θ witness {}", d, g.min_degree(), full, w ? "found" : "absent");
    return std::nullopt;
}

inline std::optional<std::string> check_regular_full(const Graph& g) {
    const auto d = domatic_ktuple_exact(g, 1);
    const bool full = d.value == g.min_degree() + 1;
    if (full && !is_perfect_matching_partition(g, d.parts))
        return fmt::format("full {}-regular graph whose domatic partition is not pairwise perfect matchings", g.min_degree());
    return std::nullopt;
}

inline void require_order(std::string_view id, std::size_t n_max, std::size_t cap) {
    if (n_max > cap) throw CapExceeded(fmt::format("{} supports --n-max <= {}, got {}", id, cap, n_max));
}

} // namespace detail

/// Runs one check. Throws UndefinedParameter for unknown ids and CapExceeded
/// when n_max exceeds what the exact solvers behind that check support.
inline Report verify_theorem(std::string_view id, const VerifyOptions& opt = {}) {
    using namespace detail;
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.id = std::string(id);
    const std::size_t cap = opt.max_failures;

    if (id == "eq1") {
        require_order(id, opt.n_max, max_enumeration_order);
        report.universe = "all labeled graphs with δ >= 1";
        run_exhaustive(report, opt, 2, {false, 1, false}, check_eq1);
    } else if (id == "prop21") {
        require_order(id, opt.n_max, max_enumeration_order);
        report.universe = "all labeled graphs with δ >= 2";
        run_exhaustive(report, opt, 3, {false, 2, false}, check_prop21);
    } else if (id == "prop22") {
        require_order(id, opt.n_max, max_enumeration_order);
        report.universe = "all labeled graphs with δ >= 2";
        run_exhaustive(report, opt, 3, {false, 2, false}, check_prop22);
    } else if (id == "thm-general") {
        require_order(id, opt.n_max, std::min(max_enumeration_order, omega_recognition_max_order));
        report.universe = "all labeled graphs with δ >= 1";
        run_exhaustive(report, opt, 2, {false, 1, false}, check_general);
    } else if (id == "thm-t2") {
        require_order(id, opt.n_max, max_enumeration_order);
        report.universe = "all labeled trees (Prüfer sequences), n >= 2";
        run_exhaustive(report, opt, 2, {true, 1, true}, check_t2);
    } else if (id == "thm-t3") {
        require_order(id, opt.n_max, max_enumeration_order);
        report.universe = "all connected labeled graphs, n >= 2";
        run_exhaustive(report, opt, 2, {true, 1, false}, check_t3);
    } else if (id == "thm-t4") {
        require_order(id, opt.n_max, max_enumeration_order);
        report.universe = "all labeled graphs with δ >= 1 (connected ones included)";
        run_exhaustive(report, opt, 2, {false, 1, false}, check_t4);
    } else if (id == "thm-domatic") {
        require_order(id, opt.n_max, std::min(max_enumeration_order, domatic_max_order));
        report.universe = "all labeled graphs with δ >= k-1 for k = 1, 2; Ψ members with rq <= 12";
        run_exhaustive(report, opt, 1, {false, 0, false}, [](const Graph& g) -> std::optional<std::string> {
            for (std::size_t k = 1; k <= 2; ++k) {
                if (g.min_degree() + 1 < k) continue;
                if (auto f = check_domatic(g, k)) return f;
            }
            return std::nullopt;
        });
        std::vector<Job> jobs;
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t r = 1; r <= domatic_max_order; ++r)
                for (std::size_t q = k; r * q <= domatic_max_order; ++q) {
                    if ((q * (k - 1)) % 2 != 0) continue;
                    PsiGraph psi = build_psi(k, r, q);
                    jobs.push_back({psi.graph, [psi, k, r, q]() -> std::optional<std::string> {
                                        const auto d = domatic_ktuple_exact(psi.graph, k).value;
                                        const auto gamma = gamma_ktuple_bruteforce(psi.graph, k).value;
                                        if (d != r || gamma != q)
                                            return fmt::format("Ψ(k={},r={},q={}): d×k={} γ×k={}", k, r, q, d, gamma);
                                        if (domatic_quadratic_form(d, psi.graph.order(), psi.graph.size(), k, gamma) != 0)
                                            return fmt::format("Ψ(k={},r={},q={}) misses equality", k, r, q);
                                        if (!is_ktuple_domatic_partition(psi.graph, psi.parts, k))
                                            return fmt::format("Ψ(k={},r={},q={}) canonical parts are not k-tuple dominating", k, r, q);
                                        return std::nullopt;
                                    }});
                }
        Report psi_part;
        run_jobs(psi_part, opt, jobs);
        report.instances += psi_part.instances;
        report.failure_count += psi_part.failure_count;
        for (auto& f : psi_part.failures)
            if (report.failures.size() < cap) report.failures.push_back(std::move(f));
        report.seed.reset();
    } else if (id == "thm-full") {
        require_order(id, opt.n_max, std::min(max_enumeration_order, domatic_max_order));
        report.universe = "all labeled graphs, n >= 1";
        run_exhaustive(report, opt, 1, {false, 0, false}, check_full);
    } else if (id == "cor-regular-full") {
        require_order(id, opt.n_max, domatic_max_order);
        report.universe = "all labeled r-regular graphs, 0 <= r < n";
        report.n_min = 1;
        report.n_max = opt.n_max;
        for (std::size_t n = 1; n <= opt.n_max; ++n) {
            ShardResult r;
            for (std::size_t deg = 0; deg < n; ++deg)
                enumerate_regular_graphs(n, deg, [&](const Graph& g) { record(r, g, check_regular_full(g), cap); });
            std::vector<ShardResult> one{std::move(r)};
            merge(report, one, n, cap);
        }
    } else if (id == "cor-formula") {
        const std::size_t side = std::min<std::size_t>(opt.n_max, 4);
        const std::size_t samples = opt.samples ? opt.samples : 50;
        report.universe = fmt::format("{} seeded random pairs, |V(G)|, |V(H)| <= {}, k = 2 and 3", samples, side);
        Rng rng(opt.seed);
        std::vector<Job> jobs;
        for (std::size_t i = 0; i < samples; ++i) {
            const Graph g = random_graph(rng, uniform_index(rng, 1, side), 0.5);
            const Graph h = random_graph_min_degree(rng, uniform_index(rng, 2, std::max<std::size_t>(side, 2)), 0.6, 1);
            const Corona c = corona(g, h);
            jobs.push_back({c.graph, [g, h, c]() -> std::optional<std::string> {
                                for (std::size_t k = 2; k <= 3; ++k) {
                                    const auto lhs = gamma_ktuple_bruteforce(c.graph, k).value;
                                    const auto rhs = g.order() * (gamma_ktuple_bruteforce(h, k - 1).value + 1);
                                    if (lhs != rhs)
                                        return fmt::format("k={} G={} H={}: γ×k(G⊙H)={} but |V(G)|(γ×(k-1)(H)+1)={}", k,
                                                           emit_graph6(g), emit_graph6(h), lhs, rhs);
                                }
                                return std::nullopt;
                            }});
        }
        run_jobs(report, opt, jobs);
        report.n_min = report.per_order.empty() ? 0 : report.per_order.front().n;
        report.n_max = report.per_order.empty() ? 0 : report.per_order.back().n;
    } else if (id == "tower") {
        const std::size_t side = std::min<std::size_t>(opt.n_max, 6);
        const std::size_t samples = opt.samples ? opt.samples : 20;
        report.universe = fmt::format("{} seeded random H with n <= {} (k = 2, 3) and {} seeded random posets", samples, side, samples);
        Rng rng(opt.seed);
        std::vector<Job> jobs;
        for (std::size_t i = 0; i < samples; ++i) {
            const Graph h = random_graph(rng, uniform_index(rng, 1, side), 0.4);
            jobs.push_back({h, [h]() -> std::optional<std::string> {
                                const auto tower = k1_corona_tower(h, 3);
                                const auto gamma = gamma_ktuple_bruteforce(h, 1).value;
                                for (std::size_t k = 2; k <= 3; ++k) {
                                    const Graph& hk = tower[k - 1];
                                    const auto value = gamma_ktuple_bruteforce(hk, k).value;
                                    if (value != gamma + k - 1)
                                        return fmt::format("k={}: γ×k(H_k)={} but γ(H)+k-1={}", k, value, gamma + k - 1);
                                    const auto diam = diameter(hk);
                                    if (!diam || *diam > 2) return fmt::format("k={}: H_k has diameter above 2", k);
                                }
                                return std::nullopt;
                            }});
        }
        for (std::size_t i = 0; i < samples; ++i) {
            auto [h, d] = random_comparability(rng, uniform_index(rng, 1, side), 0.5);
            jobs.push_back({h, [h = h, d = d]() -> std::optional<std::string> {
                                if (!is_transitive_orientation(h, d)) return std::string("generator produced a non-transitive orientation");
                                const auto ext = extend_transitive_orientation(h, d);
                                if (!is_transitive_orientation(ext.graph, ext.arcs))
                                    return std::string("extended orientation is not transitive");
                                return std::nullopt;
                            }});
        }
        run_jobs(report, opt, jobs);
        report.n_min = report.per_order.empty() ? 0 : report.per_order.front().n;
        report.n_max = report.per_order.empty() ? 0 : report.per_order.back().n;
    } else {
        throw UndefinedParameter(fmt::format("unknown theorem id '{}'", id));
    }

    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace domino
