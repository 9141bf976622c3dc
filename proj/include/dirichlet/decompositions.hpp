#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "dirichlet/graph.hpp"

namespace dirichlet {

/// Multiset of interior-boundary paths. Each path is a vertex sequence that
/// starts in Ω, stays in Ω until its last vertex, and ends in B.
struct PathCollection {
    std::vector<std::vector<VertexId>> paths;
};

struct CoveringPackingCertificate {
    std::size_t c = 0;           // min occurrences of an interior vertex
    std::size_t p = 0;           // max occurrences of an edge
    std::size_t max_length = 0;  // longest path, in edges

    /// A certificate with c = 0 leaves some interior vertex uncovered.
    [[nodiscard]] bool usable() const noexcept { return c >= 1; }
};

/// Exact multiset counts for any path collection.
/// Throws InvalidPath for non-adjacent steps, repeated vertices, or wrong endpoint classes.
inline CoveringPackingCertificate certify(const BoundaryGraph& bg, const PathCollection& pc) {
    const Graph& g = bg.graph();
    std::vector<std::size_t> cover(g.order(), 0);
    std::map<Edge, std::size_t> edge_use;
    CoveringPackingCertificate cert;
    for (std::size_t idx = 0; idx < pc.paths.size(); ++idx) {
        const auto& path = pc.paths[idx];
        auto fail = [&](const std::string& why) {
            throw Error(Errc::InvalidPath, "path #" + std::to_string(idx) + ": " + why);
        };
        if (path.size() < 2) fail("needs at least one edge");
        for (VertexId v : path) {
            if (v >= g.order()) fail("vertex out of range");
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if (!bg.is_interior(path[i])) fail("vertex " + std::to_string(path[i]) + " before the end is not interior");
            if (!g.adjacent(path[i], path[i + 1])) {
                fail("vertices " + std::to_string(path[i]) + " and " + std::to_string(path[i + 1]) + " are not adjacent");
            }
        }
        if (!bg.is_boundary(path.back())) fail("last vertex is not on the boundary");
        std::vector<VertexId> sorted = path;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("path is not simple");

        for (VertexId v : path) ++cover[v];
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            Edge e{std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])};
            cert.p = std::max(cert.p, ++edge_use[e]);
        }
        cert.max_length = std::max(cert.max_length, path.size() - 1);
    }
    cert.c = std::numeric_limits<std::size_t>::max();
    for (VertexId v : bg.interior()) cert.c = std::min(cert.c, cover[v]);
    return cert;
}

/// One path per interior vertex, following the forest of first steps toward B.
///
/// Each interior vertex points to its smallest-id neighbor one step closer to
/// B; these arcs form a forest whose roots are boundary vertices. The path of
/// v walks the arcs from v down to its root, so it has length dist(v, B) ≤ r.
/// The result is a 1-covering, and an edge is used once per descendant of its
/// upper endpoint, which stays below (d^r − 1)/(d − 1).
inline PathCollection shortest_path_forest_cover(const BoundaryGraph& bg) {
    const Graph& g = bg.graph();
    auto dist = boundary_distances(bg);
    std::vector<VertexId> next(g.order(), kUnreachable);
    for (VertexId v : bg.interior()) {
        for (VertexId w : g.neighbors(v)) {
            if (dist[w] + 1 == dist[v]) {
                next[v] = w;
                break;
            }
        }
    }
    PathCollection pc;
    for (VertexId v : bg.interior()) {
        std::vector<VertexId> path{v};
        while (bg.is_interior(path.back())) path.push_back(next[path.back()]);
        pc.paths.push_back(std::move(path));
    }
    return pc;
}

/// Vertices at distance exactly r from the leaf set of a tree.
///
/// When D ∈ {2r, 2r+1} this is one vertex or two adjacent ones. Trees with a
/// larger diameter can have many such vertices.
inline std::vector<VertexId> tree_centers(const BoundaryGraph& bg) {
    if (!is_tree_with_leaf_boundary(bg)) throw Error(Errc::NotATree, "centers need a tree with leaf boundary");
    auto dist = boundary_distances(bg);
    std::size_t r = 0;
    for (VertexId v : bg.interior()) r = std::max(r, dist[v]);
    std::vector<VertexId> out;
    for (VertexId v : bg.interior()) {
        if (dist[v] == r) out.push_back(v);
    }
    return out;
}

/// Edge-disjoint interior-boundary paths covering every interior vertex of a tree.
///
/// Roots the tree at its smallest-id center and keeps a queue of pending
/// rooted subtrees, ordered by distance of the root from the center (then by
/// root id). Each step takes the lexicographically smallest shortest path from
/// the root to a leaf inside the subtree, removes its edges, and queues every
/// leftover component, rooted where it touches the path.
///
/// The result is always a 1-covering and 1-packing. If D ∈ {2r, 2r+1} the
/// paths have length ≤ r with one center and ≤ r + 1 with two.
inline PathCollection tree_path_decomposition(const BoundaryGraph& bg) {
    if (bg.order() < 3) throw Error(Errc::TooSmall, "tree decomposition needs at least 3 vertices");
    auto centers = tree_centers(bg);
    const Graph& g = bg.graph();
    const VertexId center = centers.front();
    const auto to_center = bfs_distances(g, center);

    std::set<Edge> used;
    auto edge_of = [](VertexId a, VertexId b) { return Edge{std::min(a, b), std::max(a, b)}; };
    auto has_free_edge = [&](VertexId v) {
        return std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                           [&](VertexId w) { return !used.count(edge_of(v, w)); });
    };

    using Item = std::pair<std::size_t, VertexId>;  // (distance to center, root)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pending;
    pending.emplace(0, center);

    PathCollection pc;
    std::vector<VertexId> parent(g.order(), kUnreachable);
    std::vector<std::size_t> depth(g.order(), kUnreachable);
    while (!pending.empty()) {
        VertexId root = pending.top().second;
        pending.pop();
        if (!has_free_edge(root)) continue;

        // BFS inside the component of root over unused edges.
        std::vector<VertexId> touched{root};
        std::queue<VertexId> frontier;
        depth[root] = 0;
        frontier.push(root);
        std::size_t best_depth = kUnreachable;
        std::vector<std::vector<VertexId>> candidates;
        while (!frontier.empty()) {
            VertexId u = frontier.front();
            frontier.pop();
            if (depth[u] > best_depth) break;
            if (bg.is_boundary(u)) {
                best_depth = depth[u];
                std::vector<VertexId> path;
                for (VertexId x = u; x != root; x = parent[x]) path.push_back(x);
                path.push_back(root);
                std::reverse(path.begin(), path.end());
                candidates.push_back(std::move(path));
                continue;
            }
            for (VertexId w : g.neighbors(u)) {
                if (depth[w] != kUnreachable || used.count(edge_of(u, w))) continue;
                depth[w] = depth[u] + 1;
                parent[w] = u;
                touched.push_back(w);
                frontier.push(w);
            }
        }
        for (VertexId x : touched) depth[x] = kUnreachable;
        if (candidates.empty()) {
            throw Error(Errc::InvalidPath, "rooted subtree at " + std::to_string(root) + " has no leaf");
        }
        auto path = *std::min_element(candidates.begin(), candidates.end());

        for (std::size_t i = 0; i + 1 < path.size(); ++i) used.insert(edge_of(path[i], path[i + 1]));
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if (has_free_edge(path[i])) pending.emplace(to_center[path[i]], path[i]);
        }
        pc.paths.push_back(std::move(path));
    }
    return pc;
}

} // namespace dirichlet
