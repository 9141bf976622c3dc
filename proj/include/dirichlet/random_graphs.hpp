#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "dirichlet/graph.hpp"

namespace dirichlet::gen {

// Seeded random instances. All randomness flows through the caller's engine.

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random labeled tree on n ≥ 2 vertices via a uniform Prüfer sequence.
inline Graph prufer_tree(Rng& rng, std::size_t n) {
    if (n == 2) return Graph(2, std::vector<Edge>{{0, 1}});
    std::vector<VertexId> seq(n - 2);
    for (auto& s : seq) s = uniform(rng, 0, n - 1);
    std::vector<std::size_t> deg(n, 1);
    for (VertexId s : seq) ++deg[s];
    std::set<VertexId> leafset;
    for (VertexId v = 0; v < n; ++v) {
        if (deg[v] == 1) leafset.insert(v);
    }
    std::vector<Edge> edges;
    for (VertexId s : seq) {
        VertexId leaf = *leafset.begin();
        leafset.erase(leafset.begin());
        edges.emplace_back(leaf, s);
        if (--deg[s] == 1) leafset.insert(s);
    }
    VertexId u = *leafset.begin();
    VertexId w = *std::next(leafset.begin());
    edges.emplace_back(u, w);
    return Graph(n, edges);
}

/// Tree whose leaves all sit at depth h below `roots` (one root, or two
/// joined roots). Gives D = 2r (one root) or D = 2r + 1 (two roots).
/// Returns a graph of order 0 when the size cap is hit.
inline Graph equal_depth_tree(Rng& rng, std::size_t h, bool two_roots, std::size_t cap) {
    std::vector<Edge> edges;
    std::size_t n = 0;
    std::vector<VertexId> layer;
    std::size_t roots = two_roots ? 2 : 1;
    for (std::size_t i = 0; i < roots; ++i) layer.push_back(n++);
    if (two_roots) edges.emplace_back(0, 1);
    for (std::size_t depth = 0; depth < h; ++depth) {
        std::vector<VertexId> next;
        for (VertexId v : layer) {
            // A single root needs two children; every other vertex one.
            std::size_t lo = (!two_roots && depth == 0) ? 2 : 1;
            std::size_t kids = lo + uniform(rng, 0, 2) / 2 + (uniform(rng, 0, 5) == 0 ? 1 : 0);
            for (std::size_t c = 0; c < kids; ++c) {
                edges.emplace_back(v, n);
                next.push_back(n++);
            }
            if (n > cap) return Graph(0, std::vector<Edge>{});
        }
        layer = std::move(next);
    }
    // Shuffle labels so the structure is not visible in the ids.
    std::vector<VertexId> perm(n);
    for (VertexId v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& [a, b] : edges) {
        a = perm[a];
        b = perm[b];
    }
    return Graph(n, edges);
}

/// Random tree with 3 ≤ n ≤ max_n, leaves as boundary. Alternates between
/// Prüfer trees (usually D > 2r + 1) and equal-depth trees (D ∈ {2r, 2r+1}).
inline BoundaryGraph random_tree(Rng& rng, std::size_t max_n) {
    for (;;) {
        if (uniform(rng, 0, 1) == 0) {
            return tree_with_leaf_boundary(prufer_tree(rng, uniform(rng, 3, max_n)));
        }
        std::size_t h = uniform(rng, 1, 6);
        Graph g = equal_depth_tree(rng, h, uniform(rng, 0, 1) == 1, max_n);
        if (g.order() >= 3) return tree_with_leaf_boundary(std::move(g));
    }
}

/// Random connected graph with boundary on at most max_n ≥ 3 vertices.
///
/// A random tree on the interior plus extra interior edges, then boundary
/// vertices each joined to one to three interior vertices.
inline BoundaryGraph random_boundary_graph(Rng& rng, std::size_t max_n) {
    const std::size_t n = uniform(rng, 3, max_n);
    const std::size_t k = uniform(rng, 1, n - 1);
    std::vector<Edge> edges;
    if (k >= 2) {
        Graph t = prufer_tree(rng, k);
        edges.assign(t.edges().begin(), t.edges().end());
        const double density = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
        std::bernoulli_distribution extra(density);
        std::set<Edge> have(edges.begin(), edges.end());
        for (VertexId u = 0; u < k; ++u) {
            for (VertexId v = u + 1; v < k; ++v) {
                if (!have.count({u, v}) && extra(rng)) edges.emplace_back(u, v);
            }
        }
    }
    for (VertexId x = k; x < n; ++x) {
        std::size_t deg = std::min(k, uniform(rng, 1, 3));
        std::vector<VertexId> pool(k);
        for (VertexId v = 0; v < k; ++v) pool[v] = v;
        std::shuffle(pool.begin(), pool.end(), rng);
        for (std::size_t i = 0; i < deg; ++i) edges.emplace_back(pool[i], x);
    }
    std::vector<VertexId> boundary;
    for (VertexId x = k; x < n; ++x) boundary.push_back(x);
    return build_boundary_graph(n, edges, boundary);
}

/// Same graph with vertex v renamed perm[v].
inline BoundaryGraph relabel(const BoundaryGraph& bg, const std::vector<VertexId>& perm) {
    std::vector<Edge> edges;
    for (auto [u, v] : bg.graph().edges()) edges.emplace_back(perm[u], perm[v]);
    std::vector<VertexId> boundary;
    for (VertexId x : bg.boundary()) boundary.push_back(perm[x]);
    return build_boundary_graph(bg.order(), edges, boundary);
}

inline std::vector<VertexId> random_permutation(Rng& rng, std::size_t n) {
    std::vector<VertexId> perm(n);
    for (VertexId v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace dirichlet::gen
