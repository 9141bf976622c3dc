#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dirichlet/bounds.hpp"
#include "dirichlet/decompositions.hpp"
#include "dirichlet/extremal.hpp"
#include "dirichlet/graph_io.hpp"
#include "dirichlet/spectral.hpp"

namespace dirichlet {

// Every real number leaves the library with 12 significant digits, so output
// is stable across platforms well above the solver tolerance.

inline std::string fmt12(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// x rounded to 12 significant digits; inf/nan become null in JSON.
inline nlohmann::json num12(double x) {
    if (!std::isfinite(x)) return nullptr;
    return std::stod(fmt12(x));
}

inline nlohmann::json nums12(const std::vector<double>& xs) {
    nlohmann::json out = nlohmann::json::array();
    for (double x : xs) out.push_back(num12(x));
    return out;
}

inline nlohmann::json to_json(const GraphMetrics& m) {
    return {{"inscribed_radius", m.inscribed_radius},
            {"diameter", m.diameter},
            {"circumscribed_radius", m.circumscribed_radius},
            {"max_degree", m.max_degree},
            {"min_interior_degree", m.min_interior_degree},
            {"interior_size", m.interior_size},
            {"boundary_size", m.boundary_size},
            {"interior_boundary_edges", m.interior_boundary_edges},
            {"vertex_count", m.vertex_count}};
}

inline GraphMetrics metrics_from_json(const nlohmann::json& j) {
    GraphMetrics m;
    m.inscribed_radius = j.at("inscribed_radius").get<std::size_t>();
    m.diameter = j.at("diameter").get<std::size_t>();
    m.circumscribed_radius = j.at("circumscribed_radius").get<std::size_t>();
    m.max_degree = j.at("max_degree").get<std::size_t>();
    m.min_interior_degree = j.at("min_interior_degree").get<std::size_t>();
    m.interior_size = j.at("interior_size").get<std::size_t>();
    m.boundary_size = j.at("boundary_size").get<std::size_t>();
    m.interior_boundary_edges = j.at("interior_boundary_edges").get<std::size_t>();
    m.vertex_count = j.at("vertex_count").get<std::size_t>();
    return m;
}

inline nlohmann::json spectrum_json(const BoundaryGraph& bg, const DirichletSolution& sol) {
    return {{"interior", bg.interior()},
            {"eigenvalues", nums12(sol.spectrum.eigenvalues)},
            {"lambda1", num12(sol.ground.lambda1)},
            {"spectral_gap", num12(sol.ground.spectral_gap)},
            {"eigenfunction", nums12(sol.ground.eigenfunction)},
            {"residual", num12(sol.ground.residual)}};
}

inline nlohmann::json to_json(const BoundReport& r) {
    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& b : r.bounds) {
        bounds.push_back({{"name", b.name},
                          {"kind", to_string(b.kind)},
                          {"value", num12(b.value)},
                          {"slack", num12(b.slack)},
                          {"equality", b.equality},
                          {"asserted", b.asserted},
                          {"holds", b.holds}});
    }
    return {{"lambda1", num12(r.lambda1)},
            {"spectral_gap", num12(r.spectral_gap)},
            {"tolerance", r.tolerance},
            {"certified", r.certified()},
            {"metrics", to_json(r.metrics)},
            {"bounds", std::move(bounds)},
            {"skipped", r.skipped}};
}

/// Reads a report back and re-derives every verdict from λ1 and the values;
/// the stored slack/holds fields are ignored.
inline BoundReport bound_report_from_json(const nlohmann::json& j) {
    try {
        BoundReport r;
        r.lambda1 = j.at("lambda1").get<double>();
        const auto& gap = j.at("spectral_gap");
        r.spectral_gap = gap.is_null() ? std::numeric_limits<double>::infinity() : gap.get<double>();
        r.tolerance = j.at("tolerance").get<double>();
        r.metrics = metrics_from_json(j.at("metrics"));
        for (const auto& jb : j.at("bounds")) {
            BoundEntry b;
            b.name = jb.at("name").get<std::string>();
            auto kind = jb.at("kind").get<std::string>();
            if (kind != "lower" && kind != "upper") throw Error(Errc::ParseError, "bad bound kind " + kind);
            b.kind = kind == "lower" ? BoundKind::Lower : BoundKind::Upper;
            b.value = jb.at("value").get<double>();
            b.equality = jb.at("equality").get<bool>();
            b.asserted = jb.at("asserted").get<bool>();
            r.bounds.push_back(std::move(b));
        }
        if (j.contains("skipped")) r.skipped = j.at("skipped").get<std::vector<std::string>>();
        recheck(r);
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

inline nlohmann::json to_json(const PathCollection& pc, const CoveringPackingCertificate& cert) {
    nlohmann::json out = {{"paths", pc.paths}, {"c", cert.c}, {"p", cert.p}, {"max_length", cert.max_length}};
    if (cert.usable()) {
        out["lower_bound"] = num12(lb_covering_packing(cert.c, cert.p, cert.max_length));
    } else {
        out["lower_bound"] = nullptr;
    }
    return out;
}

inline nlohmann::json to_json(const SearchResult& r) {
    nlohmann::json argmax = nlohmann::json::array();
    for (std::size_t i = 0; i < r.argmax.size(); ++i) {
        nlohmann::json edges = nlohmann::json::array();
        for (auto [u, v] : r.argmax_trees[i].graph().edges()) edges.push_back({u, v});
        argmax.push_back({{"code", r.argmax[i].text}, {"lambda1", num12(r.argmax_lambda1[i])}, {"edges", edges}});
    }
    return {{"k", r.k},
            {"b", r.b},
            {"max_lambda1", num12(r.max_lambda1)},
            {"argmax", std::move(argmax)},
            {"total_enumerated", r.total_enumerated},
            {"runner_up", r.runner_up ? num12(*r.runner_up) : nlohmann::json(nullptr)}};
}

inline nlohmann::json to_json(const CaseCheck& c) {
    nlohmann::json shapes = nlohmann::json::array();
    for (SlpShape s : c.predicted_shapes) shapes.push_back(to_string(s));
    nlohmann::json out = {{"case", to_string(c.leaf_case)},
                          {"b", c.b},
                          {"applicable", c.applicable},
                          {"passed", c.passed()}};
    if (!c.note.empty()) out["note"] = c.note;
    if (!c.applicable) return out;
    out["predicted_shapes"] = shapes;
    out["predicted_lambda1"] = num12(c.predicted_lambda1);
    out["value_ok"] = c.value_ok;
    out["argmax_ok"] = c.argmax_ok;
    out["search"] = to_json(*c.result);
    return out;
}

inline nlohmann::json to_json(const ExtremalReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"a", r.a}, {"k", r.k}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

// CSV: one header line, then data rows. Fields never contain commas.

inline std::string bound_report_csv(const BoundReport& r) {
    std::ostringstream os;
    os << "name,kind,value,lambda1,slack,equality,asserted,holds\n";
    for (const auto& b : r.bounds) {
        os << b.name << ',' << to_string(b.kind) << ',' << fmt12(b.value) << ',' << fmt12(r.lambda1) << ','
           << fmt12(b.slack) << ',' << b.equality << ',' << b.asserted << ',' << b.holds << '\n';
    }
    return os.str();
}

inline std::string extremal_report_csv(const ExtremalReport& r) {
    std::ostringstream os;
    os << "a,k,case,b,applicable,predicted_lambda1,max_lambda1,classes,argmax_count,passed\n";
    for (const auto& c : r.checks) {
        os << r.a << ',' << r.k << ',' << to_string(c.leaf_case) << ',' << c.b << ',' << c.applicable << ',';
        if (c.applicable) {
            os << fmt12(c.predicted_lambda1) << ',' << fmt12(c.result->max_lambda1) << ','
               << c.result->total_enumerated << ',' << c.result->argmax.size();
        } else {
            os << ",,,";
        }
        os << ',' << c.passed() << '\n';
    }
    return os.str();
}

} // namespace dirichlet
