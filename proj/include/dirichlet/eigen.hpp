#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "dirichlet/error.hpp"

namespace dirichlet {

/// Dense real symmetric matrix. Symmetry is exact: writes go to both (i,j) and (j,i).
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t order) : m_(order), a_(order * order, 0.0) {}

    /// Throws DimensionMismatch unless rows form an exactly symmetric square matrix.
    static SymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows) {
        SymmetricMatrix s(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) {
                throw Error(Errc::DimensionMismatch, "matrix is not square");
            }
            for (std::size_t j = 0; j < rows.size(); ++j) {
                if (rows[i][j] != rows[j][i]) {
                    throw Error(Errc::DimensionMismatch, "matrix is not symmetric at (" +
                                                             std::to_string(i) + "," +
                                                             std::to_string(j) + ")");
                }
                s.a_[i * s.m_ + j] = rows[i][j];
            }
        }
        return s;
    }

    [[nodiscard]] std::size_t order() const noexcept { return m_; }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return a_[i * m_ + j]; }

    void set(std::size_t i, std::size_t j, double x) {
        a_[i * m_ + j] = x;
        a_[j * m_ + i] = x;
    }

    [[nodiscard]] std::vector<double> apply(std::span<const double> x) const {
        std::vector<double> y(m_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) {
            const double* row = &a_[i * m_];
            double acc = 0.0;
            for (std::size_t j = 0; j < m_; ++j) acc += row[j] * x[j];
            y[i] = acc;
        }
        return y;
    }

    [[nodiscard]] double inf_norm() const {
        double best = 0.0;
        for (std::size_t i = 0; i < m_; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < m_; ++j) s += std::abs(a_[i * m_ + j]);
            best = std::max(best, s);
        }
        return best;
    }

    [[nodiscard]] double frobenius_norm() const {
        double s = 0.0;
        for (double x : a_) s += x * x;
        return std::sqrt(s);
    }

    [[nodiscard]] const std::vector<double>& data() const noexcept { return a_; }

private:
    std::size_t m_ = 0;
    std::vector<double> a_;
};

/// Full eigendecomposition of a symmetric matrix.
struct Spectrum {
    std::vector<double> eigenvalues;                // ascending
    std::vector<std::vector<double>> eigenvectors;  // eigenvectors[k] pairs with eigenvalues[k]
    /// Achieved accuracy: max over pairs of ‖Av − λv‖∞ / (1 + ‖A‖∞), and max
    /// deviation of VᵀV from the identity, whichever is larger.
    double residual_tol = 0.0;
    std::size_t sweeps = 0;
};

struct JacobiOptions {
    double tol = 1e-12;
    std::size_t max_sweeps = 100;
};

namespace detail {

inline double off_diagonal_norm(const std::vector<double>& a, std::size_t m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i != j) s += a[i * m + j] * a[i * m + j];
        }
    }
    return std::sqrt(s);
}

// Flip v so that its largest-magnitude entry (first one on ties) is positive.
inline void normalize_sign(std::vector<double>& v) {
    if (v.empty()) return;
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    }
    if (v[best] < 0) {
        for (double& x : v) x = -x;
    }
}

} // namespace detail

/// Cyclic-by-row Jacobi eigensolver.
///
/// Sweeps visit pairs (p, q), p < q, in row order; a sweep is skipped once the
/// off-diagonal Frobenius mass is at most tol·‖A‖_F. Output is deterministic
/// for a fixed input. Throws NoConvergence when the sweep budget runs out.
inline Spectrum symmetric_eigen(const SymmetricMatrix& A, JacobiOptions opts = {}) {
    const std::size_t m = A.order();
    if (m == 0) throw Error(Errc::DimensionMismatch, "empty matrix");
    if (!(opts.tol > 0.0)) throw Error(Errc::ParamOutOfRange, "tol must be positive");

    std::vector<double> a = A.data();
    std::vector<double> v(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) v[i * m + i] = 1.0;

    const double threshold = opts.tol * A.frobenius_norm();
    std::size_t sweep = 0;
    for (;; ++sweep) {
        if (detail::off_diagonal_norm(a, m) <= threshold) break;
        if (sweep == opts.max_sweeps) {
            throw Error(Errc::NoConvergence, "Jacobi did not converge in " +
                                                 std::to_string(opts.max_sweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double apq = a[p * m + q];
                if (apq == 0.0) continue;
                const double app = a[p * m + p];
                const double aqq = a[q * m + q];
                // a_pq below the rounding level of both diagonal entries.
                const double g = 100.0 * std::abs(apq);
                if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
                    a[p * m + q] = 0.0;
                    a[q * m + p] = 0.0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a[p * m + p] = app - t * apq;
                a[q * m + q] = aqq + t * apq;
                a[p * m + q] = 0.0;
                a[q * m + p] = 0.0;
                for (std::size_t r = 0; r < m; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a[r * m + p];
                    const double arq = a[r * m + q];
                    const double nrp = arp - s * (arq + tau * arp);
                    const double nrq = arq + s * (arp - tau * arq);
                    a[r * m + p] = nrp;
                    a[p * m + r] = nrp;
                    a[r * m + q] = nrq;
                    a[q * m + r] = nrq;
                }
                for (std::size_t r = 0; r < m; ++r) {
                    const double vrp = v[r * m + p];
                    const double vrq = v[r * m + q];
                    v[r * m + p] = vrp - s * (vrq + tau * vrp);
                    v[r * m + q] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a[i * m + i] < a[j * m + j]; });

    Spectrum out;
    out.sweeps = sweep;
    out.eigenvalues.reserve(m);
    out.eigenvectors.reserve(m);
    for (std::size_t k : order) {
        out.eigenvalues.push_back(a[k * m + k]);
        std::vector<double> col(m);
        for (std::size_t r = 0; r < m; ++r) col[r] = v[r * m + k];
        detail::normalize_sign(col);
        out.eigenvectors.push_back(std::move(col));
    }

    const double scale = 1.0 + A.inf_norm();
    double worst = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        auto av = A.apply(out.eigenvectors[k]);
        for (std::size_t i = 0; i < m; ++i) {
            worst = std::max(worst, std::abs(av[i] - out.eigenvalues[k] * out.eigenvectors[k][i]) / scale);
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            double dot = 0.0;
            for (std::size_t r = 0; r < m; ++r) dot += out.eigenvectors[i][r] * out.eigenvectors[j][r];
            worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
    }
    out.residual_tol = worst;
    return out;
}

} // namespace dirichlet
