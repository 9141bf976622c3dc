#pragma once

#include <cmath>
#include <string>

#include "dirichlet/error.hpp"

namespace dirichlet {

// Closed forms for λ1 of the extremal star-like path trees with k interior
// vertices and b leaves. Each value lies strictly inside (a, a+1).

/// b = ak + s: λ1 of SLP(a+s, a; 0; k−1, 0). Requires a ≥ 1, k ≥ 2, 1 ≤ s ≤ k−1.
inline double sigma1(long a, long k, long s) {
    if (a < 1 || k < 2 || s < 1 || s > k - 1) {
        throw Error(Errc::ParamOutOfRange, "sigma1 needs a >= 1, k >= 2, 1 <= s <= k-1");
    }
    double kd = static_cast<double>(k), ad = static_cast<double>(a), sd = static_cast<double>(s);
    return (kd + 2 * ad + sd - std::sqrt((kd + sd - 2) * (kd + sd - 2) + 4 * kd - 4)) / 2;
}

/// b = ak + k − 1: λ1 of SLP(a, a+1; 0; k−1, 0). Requires a ≥ 0, k ≥ 2.
inline double sigma2(long a, long k) {
    if (a < 0 || k < 2) throw Error(Errc::ParamOutOfRange, "sigma2 needs a >= 0, k >= 2");
    double kd = static_cast<double>(k), ad = static_cast<double>(a);
    return (kd + 2 * ad + 1 - std::sqrt((kd - 1) * (kd - 1) + 4)) / 2;
}

/// b = ak + 2, k even: shared λ1 of the three tied SLP shapes. Requires a ≥ 1, k ≥ 4 even.
inline double sigma3(long a, long k) {
    if (a < 1 || k < 4 || k % 2 != 0) {
        throw Error(Errc::ParamOutOfRange, "sigma3 needs a >= 1 and even k >= 4");
    }
    double kd = static_cast<double>(k), ad = static_cast<double>(a);
    return (kd + 4 * ad + 2 - std::sqrt((kd + 2) * (kd + 2) - 16)) / 4;
}

/// The cubic whose root in (a, a+1) is λ1 of SLP(a+1, a; 2; (k−3)/2, (k−3)/2).
inline double sigma4_cubic(long a, long k, double x) {
    double kd = static_cast<double>(k), ad = static_cast<double>(a);
    double c2 = kd / 2 + 3 * ad + 3.5;
    double c1 = kd * ad + kd + 3 * ad * ad + 7 * ad + 3;
    double c0 = kd * ad * ad / 2 + kd * ad + ad * ad * ad + 3.5 * ad * ad + 3 * ad + 2;
    return ((x - c2) * x + c1) * x - c0;
}

/// b = ak + 2, k odd: root of sigma4_cubic in (a, a+1) by bisection.
/// Requires a ≥ 1, k ≥ 5 odd.
inline double sigma4(long a, long k) {
    if (a < 1 || k < 5 || k % 2 == 0) {
        throw Error(Errc::ParamOutOfRange, "sigma4 needs a >= 1 and odd k >= 5");
    }
    double lo = static_cast<double>(a) + 1e-12;
    double hi = static_cast<double>(a) + 1.0 - 1e-12;
    double flo = sigma4_cubic(a, k, lo);
    double fhi = sigma4_cubic(a, k, hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0) == (fhi < 0)) {
        throw Error(Errc::NoRootInInterval, "cubic has no sign change on (a, a+1) for a=" +
                                                std::to_string(a) + ", k=" + std::to_string(k));
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = sigma4_cubic(a, k, mid);
        if (fm == 0.0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace dirichlet
