#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "domino/domatic.hpp"
#include "domino/domatic_families.hpp"
#include "domino/error.hpp"
#include "domino/gadget.hpp"
#include "domino/ktuple.hpp"
#include "domino/slater.hpp"
#include "domino/verify.hpp"

namespace domino {

using Json = nlohmann::ordered_json;

namespace schema {
inline constexpr std::string_view certificate = "domino.certificate/1";
inline constexpr std::string_view slater = "domino.slater-report/1";
inline constexpr std::string_view domatic = "domino.domatic/1";
inline constexpr std::string_view full = "domino.full/1";
inline constexpr std::string_view gadget_labels = "domino.gadget-labels/1";
inline constexpr std::string_view gadget_solution = "domino.gadget-solution/1";
inline constexpr std::string_view verify_report = "domino.verify-report/1";
} // namespace schema

/// Throws Error unless j["schema"] names `expected`.
inline void require_schema(const Json& j, std::string_view expected) {
    if (!j.is_object() || !j.contains("schema") || !j["schema"].is_string() || j["schema"].get<std::string>() != expected)
        throw Error(fmt::format("expected a JSON object with schema '{}'", expected));
}

namespace detail {

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

inline Json set_json(const VertexSet& s) { return Json(s.to_vector()); }

inline VertexSet set_from(const Json& j, std::size_t n) {
    VertexSet s(n);
    for (const auto& v : j) {
        const auto x = v.get<std::size_t>();
        if (x >= n) throw Error(fmt::format("vertex {} out of range for order {}", x, n));
        s.set(x);
    }
    return s;
}

inline BoundSource bound_source_from(std::string_view name) {
    for (auto s : {BoundSource::double_slater, BoundSource::slater, BoundSource::degree_sum, BoundSource::edge_count,
                   BoundSource::harary_haynes, BoundSource::exhausted_search})
        if (to_string(s) == name) return s;
    throw Error(fmt::format("unknown bound source '{}'", name));
}

inline SolveMethod method_from(std::string_view name) {
    for (auto m : {SolveMethod::brute_force, SolveMethod::branch_and_bound})
        if (to_string(m) == name) return m;
    throw Error(fmt::format("unknown solve method '{}'", name));
}

inline Json parts_json(const std::vector<VertexSet>& parts) {
    Json out = Json::array();
    for (const auto& p : parts) out.push_back(set_json(p));
    return out;
}

inline std::vector<VertexSet> parts_from(const Json& j, std::size_t n) {
    std::vector<VertexSet> parts;
    for (const auto& p : j) parts.push_back(set_from(p, n));
    return parts;
}

} // namespace detail

// Certificates -------------------------------------------------------------

inline Json certificate_json(const DominationCertificate& c) {
    return Json{{"schema", schema::certificate},
                {"order", c.set.size()},
                {"k", c.k},
                {"value", c.value},
                {"set", detail::set_json(c.set)},
                {"lower_bound", c.lower_bound},
                {"bound_source", to_string(c.source)},
                {"root_bound", c.root_bound},
                {"root_bound_source", to_string(c.root_source)},
                {"method", to_string(c.method)},
                {"nodes", c.nodes}};
}

inline DominationCertificate certificate_from_json(const Json& j) {
    require_schema(j, schema::certificate);
    DominationCertificate c;
    c.k = j.at("k").get<std::size_t>();
    c.value = j.at("value").get<std::size_t>();
    c.set = detail::set_from(j.at("set"), j.at("order").get<std::size_t>());
    c.lower_bound = j.at("lower_bound").get<std::size_t>();
    c.source = detail::bound_source_from(j.at("bound_source").get<std::string>());
    c.root_bound = j.at("root_bound").get<std::size_t>();
    c.root_source = detail::bound_source_from(j.at("root_bound_source").get<std::string>());
    c.method = detail::method_from(j.at("method").get<std::string>());
    c.nodes = j.at("nodes").get<std::size_t>();
    return c;
}

// Slater report ------------------------------------------------------------

inline Json gap_checks_json(const SlaterGapChecks& c) {
    return Json{{"sl", c.sl},
                {"sl2", c.sl2},
                {"gap_cap", c.gap_cap},
                {"gap_within_bounds", c.gap_within_bounds},
                {"range_holds", c.range_holds},
                {"sl2_is_two", c.sl2_is_two},
                {"two_universal_vertices", c.two_universal_vertices},
                {"sl2_is_n", c.sl2_is_n},
                {"size_small", c.size_small},
                {"sl2_meets_lower", c.sl2_meets_lower},
                {"divisible_and_top_degree", c.divisible_and_top_degree},
                {"all_hold", c.all_hold()}};
}

inline SlaterGapChecks gap_checks_from_json(const Json& j) {
    SlaterGapChecks c;
    c.sl = j.at("sl").get<std::size_t>();
    c.sl2 = j.at("sl2").get<std::size_t>();
    c.gap_cap = j.at("gap_cap").get<std::size_t>();
    c.gap_within_bounds = j.at("gap_within_bounds").get<bool>();
    c.range_holds = j.at("range_holds").get<bool>();
    c.sl2_is_two = j.at("sl2_is_two").get<bool>();
    c.two_universal_vertices = j.at("two_universal_vertices").get<bool>();
    c.sl2_is_n = j.at("sl2_is_n").get<bool>();
    c.size_small = j.at("size_small").get<bool>();
    c.sl2_meets_lower = j.at("sl2_meets_lower").get<bool>();
    c.divisible_and_top_degree = j.at("divisible_and_top_degree").get<bool>();
    return c;
}

inline Json slater_report_json(const SlaterReport& r) {
    Json j{{"schema", schema::slater},
           {"n", r.n},
           {"m", r.m},
           {"sl", r.sl},
           {"sl2", detail::optional_json(r.sl2)},
           {"lb_regular", r.lb_regular},
           {"ub_regular", detail::optional_json(r.ub_regular)}};
    j["edge_bound"] = r.edge_bound ? Json{{"num", r.edge_bound->num}, {"den", r.edge_bound->den}} : Json(nullptr);
    j["edge_bound_attained"] = detail::optional_json(r.edge_bound_attained);
    j["gap_checks"] = r.gap_checks ? gap_checks_json(*r.gap_checks) : Json(nullptr);
    return j;
}

inline SlaterReport slater_report_from_json(const Json& j) {
    require_schema(j, schema::slater);
    SlaterReport r;
    r.n = j.at("n").get<std::size_t>();
    r.m = j.at("m").get<std::size_t>();
    r.sl = j.at("sl").get<std::size_t>();
    r.sl2 = detail::optional_from<std::size_t>(j.at("sl2"));
    r.lb_regular = j.at("lb_regular").get<std::size_t>();
    r.ub_regular = detail::optional_from<std::size_t>(j.at("ub_regular"));
    if (!j.at("edge_bound").is_null())
        r.edge_bound = Fraction::make(j["edge_bound"].at("num").get<std::int64_t>(), j["edge_bound"].at("den").get<std::int64_t>());
    r.edge_bound_attained = detail::optional_from<bool>(j.at("edge_bound_attained"));
    if (!j.at("gap_checks").is_null()) r.gap_checks = gap_checks_from_json(j["gap_checks"]);
    return r;
}

// Domatic partitions -------------------------------------------------------

inline Json domatic_json(const DomaticResult& d, std::size_t order) {
    return Json{{"schema", schema::domatic}, {"order", order}, {"k", d.k}, {"value", d.value}, {"parts", detail::parts_json(d.parts)}};
}

inline DomaticResult domatic_from_json(const Json& j) {
    require_schema(j, schema::domatic);
    DomaticResult d;
    d.k = j.at("k").get<std::size_t>();
    d.value = j.at("value").get<std::size_t>();
    d.parts = detail::parts_from(j.at("parts"), j.at("order").get<std::size_t>());
    return d;
}

/// Output of the `full` subcommand.
struct FullnessReport {
    std::size_t order = 0;
    std::size_t min_degree = 0;
    std::size_t domatic_number = 0;
    bool full = false;
    std::optional<ThetaWitness> witness;
};

inline Json fullness_json(const FullnessReport& r) {
    Json j{{"schema", schema::full},
           {"order", r.order},
           {"min_degree", r.min_degree},
           {"domatic_number", r.domatic_number},
           {"full", r.full}};
    j["witness"] = r.witness ? Json{{"v", r.witness->v}, {"host", r.witness->host}, {"parts", detail::parts_json(r.witness->parts)}}
                             : Json(nullptr);
    return j;
}

inline FullnessReport fullness_from_json(const Json& j) {
    require_schema(j, schema::full);
    FullnessReport r;
    r.order = j.at("order").get<std::size_t>();
    r.min_degree = j.at("min_degree").get<std::size_t>();
    r.domatic_number = j.at("domatic_number").get<std::size_t>();
    r.full = j.at("full").get<bool>();
    if (!j.at("witness").is_null()) {
        const Json& w = j["witness"];
        r.witness = ThetaWitness{detail::parts_from(w.at("parts"), r.order), w.at("v").get<Vertex>(), w.at("host").get<std::size_t>()};
    }
    return r;
}

// Gadget -------------------------------------------------------------------

inline Json gadget_labels_json(const GadgetLabels& L, std::size_t order, std::size_t clauses) {
    return Json{{"schema", schema::gadget_labels},
                {"order", order},
                {"variables", L.variables},
                {"clauses", clauses},
                {"block_order", L.block_order},
                {"q", L.q},
                {"q_prime", L.q_prime},
                {"q_double", L.q_double},
                {"clause_vertices", L.clause},
                {"color", L.color},
                {"double_slater", L.double_slater}};
}

inline GadgetLabels gadget_labels_from_json(const Json& j) {
    require_schema(j, schema::gadget_labels);
    GadgetLabels L;
    L.variables = j.at("variables").get<std::size_t>();
    L.block_order = j.at("block_order").get<std::size_t>();
    L.q = j.at("q").get<std::vector<Vertex>>();
    L.q_prime = j.at("q_prime").get<std::vector<Vertex>>();
    L.q_double = j.at("q_double").get<std::vector<Vertex>>();
    L.clause = j.at("clause_vertices").get<std::vector<Vertex>>();
    L.color = j.at("color").get<std::vector<std::uint8_t>>();
    L.double_slater = j.at("double_slater").get<std::size_t>();
    return L;
}

inline Json gadget_solution_json(const GadgetSolution& s, const CnfFormula& f, std::size_t order) {
    Json j{{"schema", schema::gadget_solution},
           {"order", order},
           {"variables", f.variables},
           {"target", 2 * f.variables},
           {"attains", s.attains},
           {"candidates", s.candidates}};
    if (s.attains) {
        j["set"] = detail::set_json(s.set);
        j["assignment"] = s.assignment;
        j["assignment_satisfies"] = satisfies(f, s.assignment);
    } else {
        j["set"] = nullptr;
        j["assignment"] = nullptr;
        j["assignment_satisfies"] = nullptr;
    }
    return j;
}

inline GadgetSolution gadget_solution_from_json(const Json& j) {
    require_schema(j, schema::gadget_solution);
    GadgetSolution s;
    s.attains = j.at("attains").get<bool>();
    s.candidates = j.at("candidates").get<std::uint64_t>();
    if (s.attains) {
        s.set = detail::set_from(j.at("set"), j.at("order").get<std::size_t>());
        s.assignment = j.at("assignment").get<std::vector<bool>>();
    }
    return s;
}

// Verification report ------------------------------------------------------

/// Wall time is left out unless requested so that reports are reproducible
/// byte for byte.
inline Json report_json(const Report& r, bool include_timing = false) {
    Json per_order = Json::array();
    for (const auto& row : r.per_order) per_order.push_back({{"n", row.n}, {"instances", row.instances}});
    Json failures = Json::array();
    for (const auto& f : r.failures) failures.push_back({{"graph6", f.graph6}, {"detail", f.detail}});
    Json j{{"schema", schema::verify_report},
           {"id", r.id},
           {"pass", r.pass()},
           {"universe", r.universe},
           {"n_min", r.n_min},
           {"n_max", r.n_max},
           {"seed", detail::optional_json(r.seed)},
           {"instances", r.instances},
           {"per_order", per_order},
           {"failure_count", r.failure_count},
           {"failures", failures}};
    if (include_timing) j["wall_ms"] = r.wall_ms;
    return j;
}

inline Report report_from_json(const Json& j) {
    require_schema(j, schema::verify_report);
    Report r;
    r.id = j.at("id").get<std::string>();
    r.universe = j.at("universe").get<std::string>();
    r.n_min = j.at("n_min").get<std::size_t>();
    r.n_max = j.at("n_max").get<std::size_t>();
    r.seed = detail::optional_from<std::uint64_t>(j.at("seed"));
    r.instances = j.at("instances").get<std::uint64_t>();
    for (const auto& row : j.at("per_order")) r.per_order.push_back({row.at("n").get<std::size_t>(), row.at("instances").get<std::uint64_t>()});
    r.failure_count = j.at("failure_count").get<std::uint64_t>();
    for (const auto& f : j.at("failures")) r.failures.push_back({f.at("graph6").get<std::string>(), f.at("detail").get<std::string>()});
    if (j.contains("wall_ms")) r.wall_ms = j["wall_ms"].get<double>();
    if (j.at("pass").get<bool>() != r.pass()) throw Error("report 'pass' disagrees with its failure count");
    return r;
}

} // namespace domino
