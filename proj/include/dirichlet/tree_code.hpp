#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "dirichlet/graph.hpp"

namespace dirichlet {

/// Canonical encoding of an unrooted tree: two trees have equal codes iff
/// they are isomorphic.
///
/// The tree is rooted at its eccentricity center (or split at its central
/// edge) and encoded bottom-up with sorted parenthesized child strings.
struct TreeCode {
    std::string text;

    auto operator<=>(const TreeCode&) const = default;
};

/// The one or two vertices of minimum eccentricity, found by repeatedly
/// stripping leaves.
inline std::vector<VertexId> eccentricity_centers(const Graph& t) {
    if (!is_tree(t)) throw Error(Errc::NotATree, "eccentricity centers need a tree");
    const std::size_t n = t.order();
    if (n <= 2) {
        std::vector<VertexId> all(n);
        for (VertexId v = 0; v < n; ++v) all[v] = v;
        return all;
    }
    std::vector<std::size_t> deg(n);
    std::vector<VertexId> layer;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<VertexId> next;
        for (VertexId v : layer) {
            for (VertexId w : t.neighbors(v)) {
                if (--deg[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

namespace detail {

inline std::string rooted_code(const Graph& t, VertexId v, VertexId parent) {
    std::vector<std::string> kids;
    for (VertexId w : t.neighbors(v)) {
        if (w != parent) kids.push_back(rooted_code(t, w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    out += ")";
    return out;
}

} // namespace detail

inline TreeCode tree_code(const Graph& t) {
    auto centers = eccentricity_centers(t);
    if (centers.size() == 1) return {"V" + detail::rooted_code(t, centers[0], kUnreachable)};
    auto a = detail::rooted_code(t, centers[0], centers[1]);
    auto b = detail::rooted_code(t, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return {"E" + a + b};
}

} // namespace dirichlet
