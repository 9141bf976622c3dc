#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dirichlet/error.hpp"

namespace dirichlet {

using VertexId = std::size_t;
using Edge = std::pair<VertexId, VertexId>;

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Undirected simple graph on vertices [0, n). Neighbor lists are sorted
/// ascending so every traversal visits neighbors in VertexId order.
class Graph {
public:
    Graph() = default;

    Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
        edges_.reserve(edges.size());
        for (auto [u, v] : edges) {
            if (u >= n || v >= n) {
                throw Error(Errc::VertexOutOfRange, "edge {" + std::to_string(u) + "," +
                                                        std::to_string(v) + "} with n=" +
                                                        std::to_string(n));
            }
            if (u == v) {
                throw Error(Errc::SelfLoop, "vertex " + std::to_string(u));
            }
            edges_.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end()) {
            throw Error(Errc::DuplicateEdge, "{" + std::to_string(dup->first) + "," +
                                                 std::to_string(dup->second) + "}");
        }
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    Graph(std::size_t n, const std::vector<Edge>& edges)
        : Graph(n, std::span<const Edge>(edges.data(), edges.size())) {}

    [[nodiscard]] std::size_t order() const noexcept { return adj_.size(); }
    [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }
    [[nodiscard]] std::size_t degree(VertexId v) const { return adj_.at(v).size(); }
    [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const { return adj_.at(v); }
    /// Edges as (min, max) pairs in lexicographic order.
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

    [[nodiscard]] bool adjacent(VertexId u, VertexId v) const {
        const auto& nbrs = adj_.at(u);
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    [[nodiscard]] std::size_t max_degree() const noexcept {
        std::size_t d = 0;
        for (const auto& nbrs : adj_) d = std::max(d, nbrs.size());
        return d;
    }

private:
    std::vector<std::vector<VertexId>> adj_;
    std::vector<Edge> edges_;
};

/// Single-source BFS distances; kUnreachable for vertices in other components.
inline std::vector<std::size_t> bfs_distances(const Graph& g, std::span<const VertexId> sources) {
    std::vector<std::size_t> dist(g.order(), kUnreachable);
    std::queue<VertexId> frontier;
    for (VertexId s : sources) {
        if (dist.at(s) == kUnreachable) {
            dist[s] = 0;
            frontier.push(s);
        }
    }
    while (!frontier.empty()) {
        VertexId u = frontier.front();
        frontier.pop();
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

inline std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source) {
    return bfs_distances(g, std::span<const VertexId>(&source, 1));
}

/// Shortest-path length between u and v, or std::nullopt when disconnected.
inline std::optional<std::size_t> distance(const Graph& g, VertexId u, VertexId v) {
    if (u >= g.order() || v >= g.order()) {
        throw Error(Errc::VertexOutOfRange, "distance query");
    }
    auto d = bfs_distances(g, u)[v];
    if (d == kUnreachable) return std::nullopt;
    return d;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto dist = bfs_distances(g, VertexId{0});
    return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

inline bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

/// A graph together with a validated boundary B and interior Ω = V \ B.
///
/// Invariants (checked by build_boundary_graph):
///   - no edge joins two boundary vertices;
///   - every boundary vertex has an interior neighbor;
///   - the interior is non-empty and induces a connected subgraph;
///   - the boundary is non-empty.
/// Together these make G connected.
class BoundaryGraph {
public:
    [[nodiscard]] const Graph& graph() const noexcept { return graph_; }
    [[nodiscard]] std::size_t order() const noexcept { return graph_.order(); }
    [[nodiscard]] bool is_boundary(VertexId v) const { return boundary_mask_.at(v); }
    [[nodiscard]] bool is_interior(VertexId v) const { return !boundary_mask_.at(v); }
    /// Interior vertices in ascending id order.
    [[nodiscard]] const std::vector<VertexId>& interior() const noexcept { return interior_; }
    [[nodiscard]] const std::vector<VertexId>& boundary() const noexcept { return boundary_; }
    /// Position of an interior vertex in interior(); kUnreachable for boundary vertices.
    [[nodiscard]] std::size_t interior_index(VertexId v) const { return interior_index_.at(v); }

    friend BoundaryGraph build_boundary_graph(Graph g, std::span<const VertexId> boundary);

private:
    Graph graph_;
    std::vector<bool> boundary_mask_;
    std::vector<VertexId> interior_;
    std::vector<VertexId> boundary_;
    std::vector<std::size_t> interior_index_;
};

inline BoundaryGraph build_boundary_graph(Graph g, std::span<const VertexId> boundary) {
    const std::size_t n = g.order();
    BoundaryGraph bg;
    bg.boundary_mask_.assign(n, false);
    for (VertexId b : boundary) {
        if (b >= n) throw Error(Errc::VertexOutOfRange, "boundary vertex " + std::to_string(b));
        bg.boundary_mask_[b] = true;
    }
    for (VertexId v = 0; v < n; ++v) {
        (bg.boundary_mask_[v] ? bg.boundary_ : bg.interior_).push_back(v);
    }
    if (bg.interior_.empty()) throw Error(Errc::EmptyInterior, "every vertex is on the boundary");
    if (bg.boundary_.empty()) throw Error(Errc::EmptyBoundary, "boundary set is empty");

    for (auto [u, v] : g.edges()) {
        if (bg.boundary_mask_[u] && bg.boundary_mask_[v]) {
            throw Error(Errc::BoundaryEdge,
                        "edge {" + std::to_string(u) + "," + std::to_string(v) + "} lies inside B");
        }
    }
    for (VertexId b : bg.boundary_) {
        // With E(B,B) empty, any neighbor of a boundary vertex is interior.
        if (g.degree(b) == 0) {
            throw Error(Errc::DanglingBoundary,
                        "boundary vertex " + std::to_string(b) + " has no interior neighbor");
        }
    }

    // Connectivity of the induced interior subgraph.
    std::vector<bool> seen(n, false);
    std::vector<VertexId> stack{bg.interior_.front()};
    seen[bg.interior_.front()] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        ++reached;
        for (VertexId w : g.neighbors(u)) {
            if (!bg.boundary_mask_[w] && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    if (reached != bg.interior_.size()) {
        throw Error(Errc::DisconnectedInterior, "interior induces " + std::to_string(reached) +
                                                    " of " + std::to_string(bg.interior_.size()) +
                                                    " vertices from its first vertex");
    }

    bg.interior_index_.assign(n, kUnreachable);
    for (std::size_t i = 0; i < bg.interior_.size(); ++i) bg.interior_index_[bg.interior_[i]] = i;
    bg.graph_ = std::move(g);
    return bg;
}

inline BoundaryGraph build_boundary_graph(std::size_t n, const std::vector<Edge>& edges,
                                          const std::vector<VertexId>& boundary) {
    return build_boundary_graph(Graph(n, edges), std::span<const VertexId>(boundary));
}

/// Vertices of degree one.
inline std::vector<VertexId> leaves(const Graph& g) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1) out.push_back(v);
    }
    return out;
}

/// True when G is a tree and B is exactly its leaf set.
inline bool is_tree_with_leaf_boundary(const BoundaryGraph& bg) {
    if (!is_tree(bg.graph())) return false;
    return leaves(bg.graph()) == bg.boundary();
}

/// Build a tree with its leaves as boundary.
inline BoundaryGraph tree_with_leaf_boundary(Graph g) {
    if (!is_tree(g)) throw Error(Errc::NotATree, "graph is not a tree");
    auto b = leaves(g);
    return build_boundary_graph(std::move(g), std::span<const VertexId>(b));
}

struct GraphMetrics {
    std::size_t inscribed_radius = 0;      // r
    std::size_t diameter = 0;              // D
    std::size_t circumscribed_radius = 0;  // R
    std::size_t max_degree = 0;            // d
    std::size_t min_interior_degree = 0;   // δ
    std::size_t interior_size = 0;         // |Ω|
    std::size_t boundary_size = 0;         // |B|
    std::size_t interior_boundary_edges = 0;  // |E(Ω,B)|
    std::size_t vertex_count = 0;          // n

    bool operator==(const GraphMetrics&) const = default;
};

/// Distance from every vertex to the boundary set.
inline std::vector<std::size_t> boundary_distances(const BoundaryGraph& bg) {
    return bfs_distances(bg.graph(), std::span<const VertexId>(bg.boundary()));
}

inline GraphMetrics metrics(const BoundaryGraph& bg) {
    const Graph& g = bg.graph();
    GraphMetrics m;
    m.vertex_count = g.order();
    m.interior_size = bg.interior().size();
    m.boundary_size = bg.boundary().size();
    m.max_degree = g.max_degree();

    auto to_b = boundary_distances(bg);
    m.min_interior_degree = std::numeric_limits<std::size_t>::max();
    for (VertexId v : bg.interior()) {
        m.inscribed_radius = std::max(m.inscribed_radius, to_b[v]);
        m.min_interior_degree = std::min(m.min_interior_degree, g.degree(v));
    }
    for (auto [u, v] : g.edges()) {
        if (bg.is_boundary(u) != bg.is_boundary(v)) ++m.interior_boundary_edges;
    }

    m.circumscribed_radius = std::numeric_limits<std::size_t>::max();
    for (VertexId v = 0; v < g.order(); ++v) {
        auto dist = bfs_distances(g, v);
        std::size_t ecc = *std::max_element(dist.begin(), dist.end());
        m.diameter = std::max(m.diameter, ecc);
        m.circumscribed_radius = std::min(m.circumscribed_radius, ecc);
    }
    return m;
}

} // namespace dirichlet
