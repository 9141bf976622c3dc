#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dirichlet/eigen.hpp"
#include "support/error_code.hpp"
#include "support/oracles.hpp"

using namespace dirichlet;

namespace {

oracle::Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    oracle::Matrix a(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) a[i][j] = a[j][i] = u(rng);
    }
    return a;
}

} // namespace

TEST(Oracle, InertiaCountOnDiagonal) {
    oracle::Matrix d{{1, 0, 0}, {0, -2, 0}, {0, 0, 5}};
    EXPECT_EQ(oracle::count_below(d, 0.0), 1u);
    EXPECT_EQ(oracle::count_below(d, 2.0), 2u);
    EXPECT_EQ(oracle::count_below(d, 6.0), 3u);
    auto ev = oracle::eigenvalues_by_bisection(d);
    EXPECT_NEAR(ev[0], -2.0, 1e-12);
    EXPECT_NEAR(ev[2], 5.0, 1e-12);
}

TEST(Jacobi, OneByOne) {
    auto s = symmetric_eigen(SymmetricMatrix::from_rows({{2.0}}));
    ASSERT_EQ(s.eigenvalues.size(), 1u);
    EXPECT_DOUBLE_EQ(s.eigenvalues[0], 2.0);
}

TEST(Jacobi, TwoByTwo) {
    auto s = symmetric_eigen(SymmetricMatrix::from_rows({{3, -1}, {-1, 2}}));
    EXPECT_NEAR(s.eigenvalues[0], (5 - std::sqrt(5.0)) / 2, 1e-12);
    EXPECT_NEAR(s.eigenvalues[1], (5 + std::sqrt(5.0)) / 2, 1e-12);
}

TEST(Jacobi, TridiagonalSineForm) {
    for (std::size_t n : {1u, 2u, 3u, 7u, 20u, 60u}) {
        SymmetricMatrix t(n);
        for (std::size_t i = 0; i < n; ++i) {
            t.set(i, i, 2.0);
            if (i + 1 < n) t.set(i, i + 1, -1.0);
        }
        auto got = symmetric_eigen(t).eigenvalues;
        auto want = oracle::path_dirichlet_spectrum(n);
        for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(got[i], want[i], 1e-10) << "n=" << n << " i=" << i;
    }
}

TEST(Jacobi, AgreesWithBisectionOracle) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + trial % 6;
        auto a = random_symmetric(rng, n);
        auto got = symmetric_eigen(SymmetricMatrix::from_rows(a)).eigenvalues;
        auto want = oracle::eigenvalues_by_bisection(a);
        for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(got[i], want[i], 1e-9);
    }
}

TEST(Jacobi, EigenvectorsAreOrthonormalEigenpairs) {
    std::mt19937_64 rng(8);
    auto a = random_symmetric(rng, 9);
    auto A = SymmetricMatrix::from_rows(a);
    auto s = symmetric_eigen(A);
    EXPECT_LT(s.residual_tol, 1e-10);
    for (std::size_t k = 0; k < 9; ++k) {
        auto av = A.apply(s.eigenvectors[k]);
        for (std::size_t i = 0; i < 9; ++i) EXPECT_NEAR(av[i], s.eigenvalues[k] * s.eigenvectors[k][i], 1e-10);
        for (std::size_t l = 0; l < 9; ++l) {
            double dot = 0.0;
            for (std::size_t i = 0; i < 9; ++i) dot += s.eigenvectors[k][i] * s.eigenvectors[l][i];
            EXPECT_NEAR(dot, k == l ? 1.0 : 0.0, 1e-10);
        }
    }
    for (std::size_t k = 1; k < 9; ++k) EXPECT_LE(s.eigenvalues[k - 1], s.eigenvalues[k]);
}

TEST(Jacobi, RepeatedEigenvalues) {
    // J − I for the 4×4 all-ones J: eigenvalues −1 (three times) and 3.
    oracle::Matrix a(4, std::vector<double>(4, 1.0));
    for (int i = 0; i < 4; ++i) a[i][i] = 0.0;
    auto s = symmetric_eigen(SymmetricMatrix::from_rows(a));
    EXPECT_NEAR(s.eigenvalues[0], -1.0, 1e-12);
    EXPECT_NEAR(s.eigenvalues[2], -1.0, 1e-12);
    EXPECT_NEAR(s.eigenvalues[3], 3.0, 1e-12);
}

TEST(Jacobi, Errors) {
    EXPECT_EQ(code_of([] { SymmetricMatrix::from_rows({{1, 2}, {3, 4}}); }), Errc::DimensionMismatch);
    EXPECT_EQ(code_of([] { SymmetricMatrix::from_rows({{1, 2}}); }), Errc::DimensionMismatch);
    EXPECT_EQ(code_of([] { symmetric_eigen(SymmetricMatrix(0)); }), Errc::DimensionMismatch);
    EXPECT_EQ(code_of([] { symmetric_eigen(SymmetricMatrix::from_rows({{1.0}}), {0.0, 100}); }),
              Errc::ParamOutOfRange);
    EXPECT_EQ(code_of([] { symmetric_eigen(SymmetricMatrix::from_rows({{1, 1}, {1, 1}}), {1e-300, 0}); }),
              Errc::NoConvergence);
}
