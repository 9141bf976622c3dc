#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "dirichlet/eigen.hpp"
#include "dirichlet/graph.hpp"

namespace dirichlet {

/// Dirichlet Laplacian L_Ω: rows and columns indexed by interior vertices in
/// ascending id order, diagonal = degree in the whole graph, −1 for interior
/// adjacency. Its eigenvalues are the Dirichlet eigenvalues of (G, B).
inline SymmetricMatrix dirichlet_laplacian(const BoundaryGraph& bg) {
    const auto& interior = bg.interior();
    SymmetricMatrix L(interior.size());
    for (std::size_t i = 0; i < interior.size(); ++i) {
        VertexId v = interior[i];
        L.set(i, i, static_cast<double>(bg.graph().degree(v)));
        for (VertexId w : bg.graph().neighbors(v)) {
            if (bg.is_interior(w)) L.set(i, bg.interior_index(w), -1.0);
        }
    }
    return L;
}

/// Ground state of the Dirichlet problem.
struct DirichletEigenpair {
    double lambda1 = 0.0;
    /// One value per interior vertex (ascending id), unit 2-norm, strictly positive.
    std::vector<double> eigenfunction;
    /// λ2 − λ1; +inf when |Ω| = 1.
    double spectral_gap = std::numeric_limits<double>::infinity();
    /// ‖L_Ω f − λ1 f‖∞ / (1 + ‖L_Ω‖∞) for the returned pair.
    double residual = 0.0;
};

struct DirichletSolution {
    DirichletEigenpair ground;
    Spectrum spectrum;
};

namespace detail {

// Entries of the raw solver vector below -kSignTol (after sign normalization,
// unit norm) mean the solver returned something that is not a Perron vector.
inline constexpr double kSignTol = 1e-8;

inline double residual_of(const SymmetricMatrix& L, std::span<const double> f, double lambda) {
    auto lf = L.apply(f);
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) worst = std::max(worst, std::abs(lf[i] - lambda * f[i]));
    return worst / (1.0 + L.inf_norm());
}

inline void normalize2(std::vector<double>& f) {
    double s = 0.0;
    for (double x : f) s += x * x;
    s = std::sqrt(s);
    for (double& x : f) x /= s;
}

} // namespace detail

/// Full Dirichlet spectrum plus the sign-normalized, strictly positive ground state.
///
/// The solver's ground vector is checked for mixed signs, then polished by two
/// multiplications with the nonnegative matrix cI − L_Ω applied to its absolute
/// value. That map fixes the Perron vector and keeps every entry strictly
/// positive, so entries that are tiny in exact arithmetic cannot round to ≤ 0.
inline DirichletSolution solve_dirichlet(const BoundaryGraph& bg, JacobiOptions opts = {}) {
    SymmetricMatrix L = dirichlet_laplacian(bg);
    DirichletSolution sol;
    if (L.order() == 1) {
        sol.spectrum.eigenvalues = {L(0, 0)};
        sol.spectrum.eigenvectors = {{1.0}};
        sol.ground.lambda1 = L(0, 0);
        sol.ground.eigenfunction = {1.0};
        return sol;
    }
    sol.spectrum = symmetric_eigen(L, opts);

    std::vector<double> f = sol.spectrum.eigenvectors.front();
    double sum = 0.0;
    for (double x : f) sum += x;
    if (sum < 0) {
        for (double& x : f) x = -x;
    }
    double most_negative = *std::min_element(f.begin(), f.end());
    if (most_negative < -detail::kSignTol) {
        throw Error(Errc::PerronViolation,
                    "ground eigenvector has an entry of " + std::to_string(most_negative));
    }

    double c = 1.0;
    for (std::size_t i = 0; i < L.order(); ++i) c = std::max(c, L(i, i) + 1.0);
    for (double& x : f) x = std::abs(x);
    for (int step = 0; step < 2; ++step) {
        auto lf = L.apply(f);
        for (std::size_t i = 0; i < f.size(); ++i) f[i] = c * f[i] - lf[i];
        detail::normalize2(f);
    }
    if (*std::min_element(f.begin(), f.end()) <= 0.0) {
        throw Error(Errc::PerronViolation, "ground eigenvector is not strictly positive");
    }

    sol.ground.lambda1 = sol.spectrum.eigenvalues[0];
    sol.ground.eigenfunction = std::move(f);
    sol.ground.spectral_gap = sol.spectrum.eigenvalues[1] - sol.spectrum.eigenvalues[0];
    sol.ground.residual = detail::residual_of(L, sol.ground.eigenfunction, sol.ground.lambda1);
    return sol;
}

inline DirichletEigenpair lambda1(const BoundaryGraph& bg, JacobiOptions opts = {}) {
    return solve_dirichlet(bg, opts).ground;
}

/// Σ_{xy∈E} (f̂(x) − f̂(y))² / Σ_{x∈Ω} f(x)², where f̂ extends f by zero on B.
inline double rayleigh_quotient(const BoundaryGraph& bg, std::span<const double> f) {
    if (f.size() != bg.interior().size()) {
        throw Error(Errc::DimensionMismatch, "test function needs one value per interior vertex");
    }
    double denom = 0.0;
    for (double x : f) denom += x * x;
    if (denom == 0.0) throw Error(Errc::ZeroFunction, "Rayleigh quotient of the zero function");

    auto value = [&](VertexId v) { return bg.is_interior(v) ? f[bg.interior_index(v)] : 0.0; };
    double num = 0.0;
    for (auto [u, v] : bg.graph().edges()) {
        double d = value(u) - value(v);
        num += d * d;
    }
    return num / denom;
}

/// Combinatorial Laplacian D − A of a graph.
inline SymmetricMatrix laplacian(const Graph& g) {
    SymmetricMatrix L(g.order());
    for (VertexId v = 0; v < g.order(); ++v) L.set(v, v, static_cast<double>(g.degree(v)));
    for (auto [u, v] : g.edges()) L.set(u, v, -1.0);
    return L;
}

/// Second-smallest eigenvalue of the combinatorial Laplacian (algebraic connectivity).
inline double laplacian_mu2(const Graph& g, JacobiOptions opts = {}) {
    if (g.order() < 2) throw Error(Errc::TooSmall, "mu2 needs at least two vertices");
    if (!is_connected(g)) throw Error(Errc::Disconnected, "mu2 of a disconnected graph");
    return symmetric_eigen(laplacian(g), opts).eigenvalues[1];
}

/// M = (min(i, j)) for 1 ≤ i, j ≤ ℓ, i.e. L Lᵀ for the lower-triangular all-ones L.
inline SymmetricMatrix min_matrix(std::size_t ell) {
    SymmetricMatrix M(ell);
    for (std::size_t i = 0; i < ell; ++i) {
        for (std::size_t j = i; j < ell; ++j) M.set(i, j, static_cast<double>(i + 1));
    }
    return M;
}

/// 1 / (4 sin²(jπ/(4ℓ+2))).
inline double minmatrix_reciprocal_sine(std::size_t ell, std::size_t j) {
    double s = std::sin(static_cast<double>(j) * std::numbers::pi / static_cast<double>(4 * ell + 2));
    return 1.0 / (4.0 * s * s);
}

struct MinMatrixComparison {
    Spectrum spectrum;
    /// 1/(4 sin²(kπ/(4ℓ+2))) for k = 1..ℓ, sorted ascending.
    std::vector<double> consecutive_index_form;
    /// 1/(4 sin²((2k−1)π/(4ℓ+2))) for k = 1..ℓ, sorted ascending. These are the
    /// actual eigenvalues of M.
    std::vector<double> odd_index_form;
    double consecutive_index_discrepancy = 0.0;
    double odd_index_discrepancy = 0.0;
    /// |λ_max(M) − 1/(4 sin²(π/(4ℓ+2)))|; the value both forms share.
    double lambda_max_discrepancy = 0.0;
};

/// Spectrum of the min-matrix against the sine closed forms, paired by sorted order.
///
/// The consecutive-index form k = 1..ℓ agrees with the spectrum only in its
/// largest value (k = 1); for ℓ ≥ 2 the remaining eigenvalues use odd indices.
inline MinMatrixComparison minmatrix_spectrum(std::size_t ell, JacobiOptions opts = {}) {
    if (ell == 0) throw Error(Errc::ParamOutOfRange, "min-matrix order must be positive");
    MinMatrixComparison out;
    out.spectrum = symmetric_eigen(min_matrix(ell), opts);
    for (std::size_t k = 1; k <= ell; ++k) {
        out.consecutive_index_form.push_back(minmatrix_reciprocal_sine(ell, k));
        out.odd_index_form.push_back(minmatrix_reciprocal_sine(ell, 2 * k - 1));
    }
    std::sort(out.consecutive_index_form.begin(), out.consecutive_index_form.end());
    std::sort(out.odd_index_form.begin(), out.odd_index_form.end());
    for (std::size_t i = 0; i < ell; ++i) {
        double ev = out.spectrum.eigenvalues[i];
        out.consecutive_index_discrepancy =
            std::max(out.consecutive_index_discrepancy, std::abs(ev - out.consecutive_index_form[i]));
        out.odd_index_discrepancy = std::max(out.odd_index_discrepancy, std::abs(ev - out.odd_index_form[i]));
    }
    out.lambda_max_discrepancy =
        std::abs(out.spectrum.eigenvalues.back() - minmatrix_reciprocal_sine(ell, 1));
    return out;
}

} // namespace dirichlet
