#pragma once

#include <cstddef>
#include <vector>

#include "photon_ledger/types.hpp"

namespace photon_ledger {

/// Bessel function of the first kind, order 1, for finite x >= 0.
///
/// Three regimes, chosen so that the relative error stays below 1e-10
/// away from the zeros of J1 for x up to 1e3 and beyond:
///   x <= 8        power series
///   8 < x < 25    Miller backward recurrence, normalized by J0 + 2 sum J2k = 1
///   x >= 25       Hankel asymptotic expansion, summed to its smallest term
/// Negative arguments use J1(-x) = -J1(x).
double bessel_j1(double x);

/// Integer orders 0, 1, 2 through the same machinery as bessel_j1.
double bessel_j0(double x);
double bessel_j2(double x);
double bessel_jn(int order, double x);

/// Faddeeva function w(z) = exp(-z^2) erfc(-i z).
/// Weideman's rational expansion (40 terms) in the upper half plane,
/// reflection w(z) = 2 exp(-z^2) - w(-z) below the real axis.
cplx faddeeva_w(cplx z);

struct GaussLegendreRule {
    std::vector<double> nodes;    // ascending in [-1, 1]
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] by Newton iteration on P_n.
GaussLegendreRule gauss_legendre(std::size_t n);

}  // namespace photon_ledger
