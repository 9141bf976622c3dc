#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dirichlet/families.hpp"
#include "dirichlet/random_graphs.hpp"
#include "dirichlet/spectral.hpp"
#include "support/error_code.hpp"
#include "support/oracles.hpp"

using namespace dirichlet;

namespace {

double four_sin_sq(double x) { return 4.0 * std::sin(x) * std::sin(x); }

} // namespace

TEST(DirichletLaplacian, SmallCases) {
    auto p3 = dirichlet_laplacian(gen_path(3));
    ASSERT_EQ(p3.order(), 1u);
    EXPECT_EQ(p3(0, 0), 2.0);

    auto star = dirichlet_laplacian(gen_star(5));
    ASSERT_EQ(star.order(), 1u);
    EXPECT_EQ(star(0, 0), 5.0);

    auto slp = dirichlet_laplacian(gen_slp({2, 1, 0, 1, 0}));
    ASSERT_EQ(slp.order(), 2u);
    EXPECT_EQ(slp(0, 0), 3.0);
    EXPECT_EQ(slp(0, 1), -1.0);
    EXPECT_EQ(slp(1, 1), 2.0);
}

TEST(Lambda1, ClosedForms) {
    EXPECT_NEAR(lambda1(gen_path(3)).lambda1, 2.0, 1e-12);
    EXPECT_NEAR(lambda1(gen_slp({2, 1, 0, 1, 0})).lambda1, (5 - std::sqrt(5.0)) / 2, 1e-12);
    EXPECT_NEAR(lambda1(gen_path(7)).lambda1, four_sin_sq(std::numbers::pi / 12), 1e-12);
    for (std::size_t n = 3; n <= 40; ++n) {
        EXPECT_NEAR(lambda1(gen_path(n)).lambda1, four_sin_sq(std::numbers::pi / (2.0 * (n - 1))), 1e-11);
    }
}

TEST(Lambda1, FullSpectrumOfPath) {
    auto sol = solve_dirichlet(gen_path(12));
    auto want = oracle::path_dirichlet_spectrum(10);
    ASSERT_EQ(sol.spectrum.eigenvalues.size(), 10u);
    for (std::size_t i = 0; i < 10; ++i) EXPECT_NEAR(sol.spectrum.eigenvalues[i], want[i], 1e-11);
}

TEST(Lambda1, PerronPropertiesOnRandomGraphs) {
    gen::Rng rng(21);
    for (int i = 0; i < 150; ++i) {
        auto bg = i % 3 ? gen::random_boundary_graph(rng, 40) : gen::random_tree(rng, 80);
        auto g = lambda1(bg);
        for (double x : g.eigenfunction) EXPECT_GT(x, 0.0);
        if (bg.interior().size() >= 2) {
            EXPECT_GT(g.spectral_gap, 1e-8);
        }
        EXPECT_LT(g.residual, 1e-10);
        EXPECT_NEAR(rayleigh_quotient(bg, g.eigenfunction), g.lambda1, 1e-10);
    }
}

TEST(Lambda1, InvariantUnderRelabeling) {
    gen::Rng rng(22);
    for (int i = 0; i < 40; ++i) {
        auto bg = gen::random_boundary_graph(rng, 30);
        auto other = gen::relabel(bg, gen::random_permutation(rng, bg.order()));
        EXPECT_NEAR(lambda1(bg).lambda1, lambda1(other).lambda1, 1e-10);
    }
}

TEST(Rayleigh, Examples) {
    std::vector<double> one{1.0};
    EXPECT_DOUBLE_EQ(rayleigh_quotient(gen_star(3), one), 3.0);

    // PC(2,2): value j on the layer at distance j from the nearer end.
    auto pc = gen_path_cliques({2, 2});
    std::vector<double> f;
    for (VertexId v : pc.interior()) {
        std::size_t layer = v <= 4 ? v : (v - 5) + 1;  // clique vertex 5 + (i−1) hangs on v_i
        f.push_back(static_cast<double>(std::min(layer, 4 - layer)));
    }
    EXPECT_NEAR(rayleigh_quotient(pc, f), 1.0 / 3.0, 1e-14);
}

TEST(Rayleigh, BoundsLambda1FromAbove) {
    gen::Rng rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int g = 0; g < 10; ++g) {
        auto bg = gen::random_boundary_graph(rng, 25);
        double lam = lambda1(bg).lambda1;
        for (int t = 0; t < 200; ++t) {
            std::vector<double> f(bg.interior().size());
            for (double& x : f) x = u(rng);
            EXPECT_GE(rayleigh_quotient(bg, f), lam - 1e-12);
        }
    }
}

TEST(Rayleigh, Errors) {
    auto bg = gen_path(5);
    std::vector<double> short_f{1.0};
    std::vector<double> zero(3, 0.0);
    EXPECT_EQ(code_of([&] { rayleigh_quotient(bg, short_f); }), Errc::DimensionMismatch);
    EXPECT_EQ(code_of([&] { rayleigh_quotient(bg, zero); }), Errc::ZeroFunction);
}

TEST(LaplacianMu2, Examples) {
    EXPECT_NEAR(laplacian_mu2(Graph(2, std::vector<Edge>{{0, 1}})), 2.0, 1e-12);
    EXPECT_NEAR(laplacian_mu2(Graph(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}})), 2.0, 1e-12);
    EXPECT_EQ(code_of([] { laplacian_mu2(Graph(1, std::vector<Edge>{})); }), Errc::TooSmall);
    EXPECT_EQ(code_of([] { laplacian_mu2(Graph(3, std::vector<Edge>{{0, 1}})); }), Errc::Disconnected);
}

TEST(MinMatrix, SmallOrders) {
    auto one = minmatrix_spectrum(1);
    EXPECT_NEAR(one.spectrum.eigenvalues[0], 1.0, 1e-14);
    EXPECT_NEAR(minmatrix_reciprocal_sine(1, 1), 1.0, 1e-14);

    auto two = minmatrix_spectrum(2);
    EXPECT_NEAR(two.spectrum.eigenvalues[1], (3 + std::sqrt(5.0)) / 2, 1e-12);
    EXPECT_NEAR(two.spectrum.eigenvalues[0], (3 - std::sqrt(5.0)) / 2, 1e-12);
    EXPECT_LT(two.lambda_max_discrepancy, 1e-12);
    // The consecutive-index form puts 1/(4 sin²(2π/10)) ≈ 0.7236 where the
    // spectrum has (3 − √5)/2 ≈ 0.3820.
    EXPECT_GT(two.consecutive_index_discrepancy, 0.3);
}

TEST(MinMatrix, OddIndexFormMatches) {
    for (std::size_t ell = 1; ell <= 50; ++ell) {
        auto cmp = minmatrix_spectrum(ell);
        EXPECT_LT(cmp.odd_index_discrepancy, 1e-8) << "ell=" << ell;
        EXPECT_LT(cmp.lambda_max_discrepancy, 1e-8) << "ell=" << ell;
    }
}

TEST(PartialSums, InequalityHolds) {
    std::mt19937_64 rng(24);
    std::normal_distribution<double> n01;
    for (std::size_t ell = 1; ell <= 30; ++ell) {
        const double c = minmatrix_reciprocal_sine(ell, 1);
        for (int t = 0; t < 50; ++t) {
            double s = 0.0, lhs = 0.0, rhs = 0.0;
            for (std::size_t i = 1; i <= ell; ++i) {
                double a = n01(rng);
                s += a;
                lhs += s * s;
                rhs += a * a;
            }
            EXPECT_LE(lhs, c * rhs * (1 + 1e-12));
        }
        // Equality along the reversed top eigenvector of the min-matrix,
        // since min(i, j) = (L Lᵀ)_ij and the sums are L a.
        auto sp = symmetric_eigen(min_matrix(ell));
        std::vector<double> v(sp.eigenvectors.back().rbegin(), sp.eigenvectors.back().rend());
        double lhs = 0.0, rhs = 0.0, s = 0.0;
        for (double a : v) {
            s += a;
            lhs += s * s;
            rhs += a * a;
        }
        EXPECT_NEAR(lhs, c * rhs, 1e-8 * c);
    }
}
