#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dirichlet/graph.hpp"

namespace dirichlet {

// Graph file format: {"n": int, "edges": [[u,v],...], "boundary": [ids...]}.
// Exactly these three fields; anything else is rejected.

inline nlohmann::json to_json(const BoundaryGraph& bg) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : bg.graph().edges()) edges.push_back({u, v});
    return {{"n", bg.order()}, {"edges", std::move(edges)}, {"boundary", bg.boundary()}};
}

inline BoundaryGraph boundary_graph_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error(Errc::ParseError, "graph document must be an object");
    for (const auto& item : j.items()) {
        const auto& key = item.key();
        if (key != "n" && key != "edges" && key != "boundary") {
            throw Error(Errc::ParseError, "unknown field \"" + key + "\"");
        }
    }
    for (const char* key : {"n", "edges", "boundary"}) {
        if (!j.contains(key)) throw Error(Errc::ParseError, std::string("missing field \"") + key + "\"");
    }
    const auto& jn = j.at("n");
    if (!jn.is_number_integer() || jn.get<long long>() < 0) {
        throw Error(Errc::ParseError, "\"n\" must be a non-negative integer");
    }
    auto n = jn.get<std::size_t>();

    auto read_id = [](const nlohmann::json& x) -> VertexId {
        if (!x.is_number_integer() || x.get<long long>() < 0) {
            throw Error(Errc::ParseError, "vertex ids must be non-negative integers");
        }
        return x.get<VertexId>();
    };

    const auto& je = j.at("edges");
    if (!je.is_array()) throw Error(Errc::ParseError, "\"edges\" must be an array");
    std::vector<Edge> edges;
    edges.reserve(je.size());
    for (const auto& e : je) {
        if (!e.is_array() || e.size() != 2) throw Error(Errc::ParseError, "edge must be a pair [u,v]");
        edges.emplace_back(read_id(e[0]), read_id(e[1]));
    }

    const auto& jb = j.at("boundary");
    if (!jb.is_array()) throw Error(Errc::ParseError, "\"boundary\" must be an array");
    std::vector<VertexId> boundary;
    for (const auto& b : jb) boundary.push_back(read_id(b));

    return build_boundary_graph(n, edges, boundary);
}

inline BoundaryGraph parse_boundary_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::ParseError, e.what());
    }
    return boundary_graph_from_json(j);
}

inline BoundaryGraph load_boundary_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_boundary_graph(ss.str());
}

} // namespace dirichlet
