#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "dirichlet/decompositions.hpp"
#include "dirichlet/graph.hpp"
#include "dirichlet/sigma.hpp"
#include "dirichlet/spectral.hpp"

namespace dirichlet {

inline constexpr double kBoundTol = 1e-9;

namespace detail {
inline double four_sin_sq(double denom) {
    double s = std::sin(std::numbers::pi / denom);
    return 4.0 * s * s;
}
} // namespace detail

/// 1 / (r |Ω|).
inline double lb_volume_radius(const GraphMetrics& m) {
    return 1.0 / (static_cast<double>(m.inscribed_radius) * static_cast<double>(m.interior_size));
}

/// 1 / (D |Ω|), the weaker diameter form.
inline double lb_volume_diameter(const GraphMetrics& m) {
    return 1.0 / (static_cast<double>(m.diameter) * static_cast<double>(m.interior_size));
}

/// (d − 1) / (r d^r); 0 when d = 1.
inline double lb_degree_radius(const GraphMetrics& m) {
    if (m.max_degree <= 1) return 0.0;
    double d = static_cast<double>(m.max_degree);
    double r = static_cast<double>(m.inscribed_radius);
    return (d - 1.0) / (r * std::pow(d, r));
}

/// 1 / (d+1)^r. Bounds the normalized Dirichlet eigenvalue; reported for
/// comparison only.
inline double lb_meng_lin(const GraphMetrics& m) {
    return std::pow(static_cast<double>(m.max_degree) + 1.0, -static_cast<double>(m.inscribed_radius));
}

/// 4 sin²(π/(4r+2)): the bound for trees with D = 2r.
inline double tree_sine_even(std::size_t r) { return detail::four_sin_sq(4.0 * static_cast<double>(r) + 2.0); }
/// 4 sin²(π/(4r+6)): the bound for trees with D = 2r + 1.
inline double tree_sine_odd(std::size_t r) { return detail::four_sin_sq(4.0 * static_cast<double>(r) + 6.0); }

struct SineBound {
    double value = 0.0;
    double weak = 0.0;  // 1/r² or 1/(r+1)²
    bool even_diameter = true;
};

/// Tree lower bound by inscribed radius, choosing the form by the parity of D.
///
/// Applies to trees with leaf boundary and D ∈ {2r, 2r+1}. Trees always have
/// D ≥ 2r, but D can exceed 2r + 1 (e.g. caterpillars), in which case this
/// throws DiameterRadiusMismatch.
inline SineBound lb_tree_sine(const BoundaryGraph& bg, const GraphMetrics& m) {
    if (!is_tree_with_leaf_boundary(bg)) throw Error(Errc::NotATree, "sine bound needs a tree with leaf boundary");
    if (m.vertex_count < 3) throw Error(Errc::TooSmall, "sine bound needs |V| >= 3");
    const std::size_t r = m.inscribed_radius;
    if (m.diameter == 2 * r) {
        return {tree_sine_even(r), 1.0 / static_cast<double>(r * r), true};
    }
    if (m.diameter == 2 * r + 1) {
        return {tree_sine_odd(r), 1.0 / static_cast<double>((r + 1) * (r + 1)), false};
    }
    throw Error(Errc::DiameterRadiusMismatch,
                "D=" + std::to_string(m.diameter) + " is neither 2r nor 2r+1 for r=" + std::to_string(r));
}

inline SineBound lb_tree_sine(const BoundaryGraph& bg) { return lb_tree_sine(bg, metrics(bg)); }

/// (4c/p) sin²(π/(4ℓ+2)) for a c-covering, p-packing path system with paths of
/// length at most ℓ.
inline double lb_covering_packing(std::size_t c, std::size_t p, std::size_t ell) {
    if (c < 1 || p < 1 || ell < 1) throw Error(Errc::ParamOutOfRange, "need c, p, l >= 1");
    return static_cast<double>(c) / static_cast<double>(p) * tree_sine_even(ell);
}

/// c / (p ℓ²).
inline double lb_covering_packing_weak(std::size_t c, std::size_t p, std::size_t ell) {
    if (c < 1 || p < 1 || ell < 1) throw Error(Errc::ParamOutOfRange, "need c, p, l >= 1");
    return static_cast<double>(c) / (static_cast<double>(p) * static_cast<double>(ell * ell));
}

struct UpperBound {
    double value = 0.0;
    bool equality = false;
};

/// |E(Ω,B)| / |Ω|, with equality exactly when every interior vertex has
/// |E(Ω,B)|/|Ω| boundary neighbors (which forces divisibility).
inline UpperBound ub_edge_ratio(const BoundaryGraph& bg) {
    std::vector<std::size_t> boundary_nbrs;
    std::size_t cut = 0;
    for (VertexId v : bg.interior()) {
        std::size_t cnt = 0;
        for (VertexId w : bg.graph().neighbors(v)) cnt += bg.is_boundary(w) ? 1 : 0;
        boundary_nbrs.push_back(cnt);
        cut += cnt;
    }
    const std::size_t k = bg.interior().size();
    UpperBound ub{static_cast<double>(cut) / static_cast<double>(k), false};
    if (cut % k == 0) {
        const std::size_t q = cut / k;
        ub.equality = std::all_of(boundary_nbrs.begin(), boundary_nbrs.end(),
                                  [q](std::size_t x) { return x == q; });
    }
    return ub;
}

/// Minimum interior degree; equality exactly for the star with interior center.
inline UpperBound ub_min_degree(const BoundaryGraph& bg) {
    std::size_t delta = std::numeric_limits<std::size_t>::max();
    for (VertexId v : bg.interior()) delta = std::min(delta, bg.graph().degree(v));
    // A single interior vertex adjacent to every boundary vertex, and no
    // boundary-boundary edges, is exactly the star K_{1,|B|}.
    bool star = bg.interior().size() == 1 && bg.graph().degree(bg.interior().front()) + 1 == bg.order();
    return {static_cast<double>(delta), star};
}

struct TreeUpperBounds {
    double b_over_k = 0.0;   // |B| / |Ω|
    double diam_form = 0.0;  // n / (D − 1) − 1
    bool b_over_k_equality = false;
    bool diam_form_equality = false;
};

inline TreeUpperBounds ub_tree_corollaries(const BoundaryGraph& bg, const GraphMetrics& m) {
    if (!is_tree_with_leaf_boundary(bg)) throw Error(Errc::NotATree, "tree corollaries need a tree with leaf boundary");
    TreeUpperBounds out;
    out.b_over_k = static_cast<double>(m.boundary_size) / static_cast<double>(m.interior_size);
    out.diam_form = static_cast<double>(m.vertex_count) / static_cast<double>(m.diameter - 1) - 1.0;
    // In a tree |E(Ω,B)| = |B|, so the edge-ratio characterization applies.
    out.b_over_k_equality = ub_edge_ratio(bg).equality;
    // n/(D−1) − 1 = |B|/|Ω| exactly when |Ω| = D − 1.
    out.diam_form_equality = out.b_over_k_equality && m.interior_size + 1 == m.diameter;
    return out;
}

inline TreeUpperBounds ub_tree_corollaries(const BoundaryGraph& bg) { return ub_tree_corollaries(bg, metrics(bg)); }

enum class BoundKind { Lower, Upper };

inline std::string to_string(BoundKind k) { return k == BoundKind::Lower ? "lower" : "upper"; }

struct BoundEntry {
    std::string name;
    BoundKind kind = BoundKind::Lower;
    double value = 0.0;
    /// λ1 − value for lower bounds, value − λ1 for upper bounds.
    double slack = 0.0;
    bool equality = false;
    /// False for comparison-only entries that are not claimed to bound λ1.
    bool asserted = true;
    bool holds = true;
};

struct BoundReport {
    double lambda1 = 0.0;
    double spectral_gap = 0.0;
    GraphMetrics metrics;
    std::vector<BoundEntry> bounds;
    /// Bounds that were not evaluated, with the reason.
    std::vector<std::string> skipped;
    double tolerance = kBoundTol;

    [[nodiscard]] bool certified() const {
        return std::all_of(bounds.begin(), bounds.end(), [](const BoundEntry& b) { return b.holds; });
    }

    [[nodiscard]] const BoundEntry* find(const std::string& name) const {
        for (const auto& b : bounds) {
            if (b.name == name) return &b;
        }
        return nullptr;
    }
};

/// Re-check every asserted entry against the report's λ1. Used both when
/// building a report and when validating one read back from disk.
inline void recheck(BoundReport& report) {
    for (auto& b : report.bounds) {
        b.slack = b.kind == BoundKind::Lower ? report.lambda1 - b.value : b.value - report.lambda1;
        b.holds = !b.asserted || b.slack >= -report.tolerance;
    }
}

struct VerifyOptions {
    double tolerance = kBoundTol;
    JacobiOptions solver{};
};

/// λ1 alongside every applicable bound.
///
/// Always: volume-radius, volume-diameter, degree-radius, the covering/packing
/// bound from the shortest-path forest, edge ratio, minimum degree, and the
/// Meng–Lin baseline (not asserted). Trees with leaf boundary add the sine
/// bound (when D ∈ {2r, 2r+1}), the covering/packing bound from the
/// center-rooted decomposition, and the two leaf-count upper bounds.
inline BoundReport verify_all(const BoundaryGraph& bg, VerifyOptions opts = {}) {
    BoundReport rep;
    rep.tolerance = opts.tolerance;
    rep.metrics = metrics(bg);
    auto ground = lambda1(bg, opts.solver);
    rep.lambda1 = ground.lambda1;
    rep.spectral_gap = ground.spectral_gap;
    const auto& m = rep.metrics;

    auto lower = [&](std::string name, double v, bool asserted = true) {
        rep.bounds.push_back({std::move(name), BoundKind::Lower, v, 0.0, false, asserted, true});
    };
    auto upper = [&](std::string name, double v, bool eq) {
        rep.bounds.push_back({std::move(name), BoundKind::Upper, v, 0.0, eq, true, true});
    };

    lower("volume_radius", lb_volume_radius(m));
    lower("volume_diameter", lb_volume_diameter(m));
    lower("degree_radius", lb_degree_radius(m));
    lower("meng_lin_baseline", lb_meng_lin(m), false);

    auto forest = certify(bg, shortest_path_forest_cover(bg));
    lower("covering_packing_forest", lb_covering_packing(forest.c, forest.p, forest.max_length));

    auto edge = ub_edge_ratio(bg);
    upper("edge_ratio", edge.value, edge.equality);
    auto mindeg = ub_min_degree(bg);
    upper("min_degree", mindeg.value, mindeg.equality);

    if (is_tree_with_leaf_boundary(bg)) {
        try {
            auto sine = lb_tree_sine(bg, m);
            lower(sine.even_diameter ? "tree_sine_even" : "tree_sine_odd", sine.value);
            lower(sine.even_diameter ? "tree_sine_even_weak" : "tree_sine_odd_weak", sine.weak);
        } catch (const Error& e) {
            if (e.code() != Errc::DiameterRadiusMismatch) throw;
            rep.skipped.push_back("tree_sine: " + std::string(e.what()));
        }
        auto tree_cert = certify(bg, tree_path_decomposition(bg));
        lower("covering_packing_tree_center",
              lb_covering_packing(tree_cert.c, tree_cert.p, tree_cert.max_length));
        auto cor = ub_tree_corollaries(bg, m);
        upper("leaf_ratio", cor.b_over_k, cor.b_over_k_equality);
        upper("diameter_form", cor.diam_form, cor.diam_form_equality);
    } else {
        rep.skipped.emplace_back("tree bounds: not a tree with leaf boundary");
    }

    recheck(rep);
    return rep;
}

} // namespace dirichlet
