#pragma once

#include <string>
#include <vector>

#include "dirichlet/graph.hpp"
#include "dirichlet/sigma.hpp"

namespace dirichlet {

// Vertex numbering in every generator is fixed: the backbone path first,
// then attachment groups in the order documented on each function.

struct PathCliquesParams {
    std::size_t half_length = 2;  // ℓ ≥ 2; the path has 2ℓ edges
    std::size_t clique_size = 1;  // α ≥ 1; each internal path vertex carries a K_{α−1}
};

/// Path-cliques graph PC(ℓ, α).
///
/// Ids 0..2ℓ are the path v0..v_{2ℓ}; then for i = 1..2ℓ−1 in order, the α−1
/// vertices of the clique joined to v_i. Boundary is {v0, v_{2ℓ}}, so
/// |Ω| = (2ℓ−1)α and D = 2ℓ.
inline BoundaryGraph gen_path_cliques(PathCliquesParams pp) {
    if (pp.half_length < 2 || pp.clique_size < 1) {
        throw Error(Errc::ParamOutOfRange, "PC(l, alpha) needs l >= 2 and alpha >= 1");
    }
    const std::size_t path_len = 2 * pp.half_length;
    const std::size_t extra = pp.clique_size - 1;
    const std::size_t n = path_len + 1 + (path_len - 1) * extra;
    std::vector<Edge> edges;
    for (VertexId i = 0; i < path_len; ++i) edges.emplace_back(i, i + 1);
    VertexId next = path_len + 1;
    for (VertexId i = 1; i < path_len; ++i) {
        VertexId first = next;
        for (std::size_t a = 0; a < extra; ++a, ++next) {
            edges.emplace_back(i, next);
            for (VertexId prev = first; prev < next; ++prev) edges.emplace_back(prev, next);
        }
    }
    return build_boundary_graph(n, edges, {0, path_len});
}

struct SlpParams {
    std::size_t p = 0;  // leaves on each end of the backbone path
    std::size_t q = 1;  // leaves on every pendant interior vertex and internal path vertex
    std::size_t c = 0;  // backbone path length
    std::size_t d = 0;  // pendant interior vertices on u0
    std::size_t e = 0;  // pendant interior vertices on u_c
};

/// Star-like path tree SLP(p, q; c; d, e) with its leaves as boundary.
///
/// Ids: u0..u_c are 0..c; then u_{0,1..d}; then u_{c,1..e}; then leaves in
/// the order p on u0, p on u_c (only when c ≥ 1), q on each u_{0,i}, q on each
/// u_{c,j}, q on each of u_1..u_{c−1}.
inline BoundaryGraph gen_slp(SlpParams sp) {
    if (sp.q < 1) throw Error(Errc::ParamOutOfRange, "SLP needs q >= 1");
    const std::size_t c = sp.c;
    auto degree_of_end = [&](bool first) {
        if (c == 0) return sp.p + sp.d + sp.e;
        return sp.p + 1 + (first ? sp.d : sp.e);
    };
    if (degree_of_end(true) < 2 || degree_of_end(false) < 2) {
        throw Error(Errc::DegenerateInterior,
                    "an end of the backbone path would be a leaf (p, d, e too small)");
    }

    std::vector<Edge> edges;
    for (VertexId i = 0; i < c; ++i) edges.emplace_back(i, i + 1);
    VertexId next = c + 1;
    std::vector<VertexId> pendant0, pendantc;
    for (std::size_t i = 0; i < sp.d; ++i) {
        edges.emplace_back(0, next);
        pendant0.push_back(next++);
    }
    for (std::size_t j = 0; j < sp.e; ++j) {
        edges.emplace_back(c, next);
        pendantc.push_back(next++);
    }
    auto attach_leaves = [&](VertexId host, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) edges.emplace_back(host, next++);
    };
    attach_leaves(0, sp.p);
    if (c >= 1) attach_leaves(c, sp.p);
    for (VertexId u : pendant0) attach_leaves(u, sp.q);
    for (VertexId u : pendantc) attach_leaves(u, sp.q);
    for (VertexId i = 1; i < c; ++i) attach_leaves(i, sp.q);

    return tree_with_leaf_boundary(Graph(next, edges));
}

/// Star K_{1,b}: center 0 interior, leaves 1..b boundary.
inline BoundaryGraph gen_star(std::size_t b) {
    if (b < 2) throw Error(Errc::ParamOutOfRange, "star needs b >= 2");
    std::vector<Edge> edges;
    for (VertexId i = 1; i <= b; ++i) edges.emplace_back(0, i);
    return tree_with_leaf_boundary(Graph(b + 1, edges));
}

/// Path P_n on 0..n−1 with the two endpoints as boundary.
inline BoundaryGraph gen_path(std::size_t n) {
    if (n < 3) throw Error(Errc::ParamOutOfRange, "path needs n >= 3");
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return tree_with_leaf_boundary(Graph(n, edges));
}

struct MoharParams {
    std::size_t k = 1;  // new vertices at each end
    std::size_t t = 1;  // length of the backbone path P_{t+1}
};

/// P_{k,t}: the path 0..t with k new vertices attached to each end.
/// n = t + 1 + 2k and D = t + 2. Ids t+1..t+k hang on 0, the rest on t.
inline Graph gen_mohar(MoharParams mp) {
    if (mp.k < 1 || mp.t < 1) throw Error(Errc::ParamOutOfRange, "P_{k,t} needs k, t >= 1");
    std::vector<Edge> edges;
    for (VertexId i = 0; i < mp.t; ++i) edges.emplace_back(i, i + 1);
    VertexId next = mp.t + 1;
    for (std::size_t i = 0; i < mp.k; ++i) edges.emplace_back(0, next++);
    for (std::size_t i = 0; i < mp.k; ++i) edges.emplace_back(mp.t, next++);
    return Graph(next, edges);
}

/// Path with `interior_length` interior vertices 0..L−1 and q leaves on every
/// interior vertex, so each interior vertex sees exactly q boundary neighbors.
inline BoundaryGraph gen_leafy_path(std::size_t interior_length, std::size_t q) {
    if (interior_length < 1 || q < 1) throw Error(Errc::ParamOutOfRange, "leafy path needs L, q >= 1");
    if (interior_length == 1 && q < 2) throw Error(Errc::DegenerateInterior, "single vertex needs q >= 2");
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < interior_length; ++i) edges.emplace_back(i, i + 1);
    VertexId next = interior_length;
    for (VertexId i = 0; i < interior_length; ++i) {
        for (std::size_t j = 0; j < q; ++j) edges.emplace_back(i, next++);
    }
    return tree_with_leaf_boundary(Graph(next, edges));
}

/// Extremal star-like path trees with a closed-form ground state.
enum class SlpShape {
    Sigma1,       // SLP(a+s, a; 0; k−1, 0),               b = ak + s
    Sigma2,       // SLP(a, a+1; 0; k−1, 0),               b = ak + k − 1
    Sigma3Path1,  // SLP(a+1, a; 1; (k−2)/2, (k−2)/2),     b = ak + 2, k even
    Sigma3Path2,  // SLP(a+1, a; 2; (k−4)/2, (k−2)/2),     b = ak + 2, k even
    Sigma3Path3,  // SLP(a+1, a; 3; (k−4)/2, (k−4)/2),     b = ak + 2, k even
    Sigma4,       // SLP(a+1, a; 2; (k−3)/2, (k−3)/2),     b = ak + 2, k odd
};

inline std::string to_string(SlpShape shape) {
    switch (shape) {
    case SlpShape::Sigma1: return "sigma1";
    case SlpShape::Sigma2: return "sigma2";
    case SlpShape::Sigma3Path1: return "sigma3-c1";
    case SlpShape::Sigma3Path2: return "sigma3-c2";
    case SlpShape::Sigma3Path3: return "sigma3-c3";
    case SlpShape::Sigma4: return "sigma4";
    }
    return "unknown";
}

inline double slp_sigma(SlpShape shape, long a, long k, long s = 1) {
    switch (shape) {
    case SlpShape::Sigma1: return sigma1(a, k, s);
    case SlpShape::Sigma2: return sigma2(a, k);
    case SlpShape::Sigma3Path1:
    case SlpShape::Sigma3Path2:
    case SlpShape::Sigma3Path3: return sigma3(a, k);
    case SlpShape::Sigma4: return sigma4(a, k);
    }
    throw Error(Errc::ParamOutOfRange, "unknown SLP shape");
}

/// SLP parameters realizing a shape; validates the ranges through slp_sigma.
inline SlpParams slp_params(SlpShape shape, long a, long k, long s = 1) {
    (void)slp_sigma(shape, a, k, s);
    auto u = [](long x) { return static_cast<std::size_t>(x); };
    switch (shape) {
    case SlpShape::Sigma1: return {u(a + s), u(a), 0, u(k - 1), 0};
    case SlpShape::Sigma2: return {u(a), u(a + 1), 0, u(k - 1), 0};
    case SlpShape::Sigma3Path1: return {u(a + 1), u(a), 1, u((k - 2) / 2), u((k - 2) / 2)};
    case SlpShape::Sigma3Path2: return {u(a + 1), u(a), 2, u((k - 4) / 2), u((k - 2) / 2)};
    case SlpShape::Sigma3Path3: return {u(a + 1), u(a), 3, u((k - 4) / 2), u((k - 4) / 2)};
    case SlpShape::Sigma4: return {u(a + 1), u(a), 2, u((k - 3) / 2), u((k - 3) / 2)};
    }
    throw Error(Errc::ParamOutOfRange, "unknown SLP shape");
}

struct SlpWitness {
    SlpParams params;
    BoundaryGraph tree;
    double sigma = 0.0;
    /// Closed-form ground state, one value per interior vertex (ascending id).
    std::vector<double> eigenfunction;
};

/// Generated tree together with its closed-form λ1 and eigenfunction.
/// Interior vertices of a generated SLP are exactly ids 0..k−1, so entries
/// are indexed by vertex id.
inline SlpWitness slp_eigenfunction(SlpShape shape, long a, long k, long s = 1) {
    SlpWitness w;
    w.sigma = slp_sigma(shape, a, k, s);
    w.params = slp_params(shape, a, k, s);
    w.tree = gen_slp(w.params);

    const double ad = static_cast<double>(a);
    const std::size_t c = w.params.c;
    const std::size_t interior = c + 1 + w.params.d + w.params.e;
    const double t = 1.0 / (ad + 1.0 - w.sigma);
    std::vector<double> f(interior, t);
    switch (shape) {
    case SlpShape::Sigma1:
        f[0] = 1.0;
        break;
    case SlpShape::Sigma2:
        std::fill(f.begin(), f.end(), 1.0 / (ad + 2.0 - w.sigma));
        f[0] = 1.0;
        break;
    case SlpShape::Sigma3Path1:
        f[0] = f[1] = 1.0;
        break;
    case SlpShape::Sigma3Path2:
        // u0 | u1 u2 | u_{0,i} at 1, u_{2,j} at t
        f[0] = ad + 1.0 - w.sigma;
        f[1] = f[2] = 1.0;
        for (std::size_t i = 0; i < w.params.d; ++i) f[c + 1 + i] = 1.0;
        break;
    case SlpShape::Sigma3Path3:
        f[0] = f[3] = 1.0;
        break;
    case SlpShape::Sigma4:
        f[0] = f[2] = 1.0;
        f[1] = 2.0 / (ad + 2.0 - w.sigma);
        break;
    }
    w.eigenfunction = std::move(f);
    return w;
}

} // namespace dirichlet
