#include "photon_ledger/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "photon_ledger/constants.hpp"
#include "photon_ledger/errors.hpp"

namespace photon_ledger {
namespace {

constexpr double kSeriesLimit = 8.0;
constexpr double kAsymptoticLimit = 25.0;

double series_jn(int order, double x) {
    const double half = 0.5 * x;
    double term = 1.0;
    for (int i = 1; i <= order; ++i) term *= half / i;
    double sum = term;
    const double q = -half * half;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * (k + order));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// Miller's algorithm returning J0, J1, J2 at once.
std::array<double, 3> miller_j012(double x) {
    int top = static_cast<int>(x) + 40;
    if (top % 2) ++top;
    double next = 0.0;    // J_{m+1}
    double cur = 1e-30;   // J_m
    double norm = 0.0;
    std::array<double, 3> low{};
    for (int m = top; m > 0; --m) {
        const double prev = 2.0 * m / x * cur - next;  // J_{m-1}
        next = cur;
        cur = prev;
        const int order = m - 1;
        if (order % 2 == 0 && order > 0) norm += 2.0 * cur;
        if (order <= 2) low[order] = cur;
        if (std::abs(cur) > 1e250) {
            cur *= 1e-250;
            next *= 1e-250;
            norm *= 1e-250;
            for (auto& v : low) v *= 1e-250;
        }
    }
    norm += low[0];
    for (auto& v : low) v /= norm;
    return low;
}

double asymptotic_jn(int order, double x) {
    const double mu = 4.0 * order * order;
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (k * 8.0 * x);
        if (std::abs(term) > last) break;  // series started to diverge
        last = std::abs(term);
        // k odd contributes to Q, k even to P; signs alternate in pairs.
        const int r = k % 4;
        if (r == 1) q += term;
        else if (r == 2) p -= term;
        else if (r == 3) q -= term;
        else p += term;
        if (last < 1e-17) break;
    }
    const double phase = (0.5 * order + 0.25) * kPi;
    const double s = std::sin(x);
    const double c = std::cos(x);
    const double cos_chi = c * std::cos(phase) + s * std::sin(phase);
    const double sin_chi = s * std::cos(phase) - c * std::sin(phase);
    return std::sqrt(2.0 / (kPi * x)) * (p * cos_chi - q * sin_chi);
}

}  // namespace

double bessel_jn(int order, double x) {
    if (order < 0 || order > 2) throw DomainError("bessel_jn supports orders 0, 1, 2");
    if (!std::isfinite(x)) throw DomainError("bessel_jn: non-finite argument");
    if (x < 0.0) return (order % 2 ? -1.0 : 1.0) * bessel_jn(order, -x);
    if (x == 0.0) return order == 0 ? 1.0 : 0.0;
    if (x <= kSeriesLimit) return series_jn(order, x);
    if (x < kAsymptoticLimit) return miller_j012(x)[order];
    return asymptotic_jn(order, x);
}

double bessel_j0(double x) { return bessel_jn(0, x); }
double bessel_j1(double x) { return bessel_jn(1, x); }
double bessel_j2(double x) { return bessel_jn(2, x); }

namespace {

constexpr int kWeidemanTerms = 40;

struct WeidemanTable {
    double L;
    std::array<double, kWeidemanTerms> coeff;  // highest power first

    WeidemanTable() {
        const int M = 2 * kWeidemanTerms;
        const int M2 = 2 * M;
        L = std::sqrt(kWeidemanTerms / std::sqrt(2.0));
        // f sampled at theta_k = k pi / M, k = -M+1 .. M-1, plus a leading zero,
        // then fftshift-ed; the coefficients are Re(DFT)/M2 at indices 1..N.
        std::array<double, 4 * kWeidemanTerms> f{};
        f[0] = 0.0;
        for (int k = -M + 1; k <= M - 1; ++k) {
            const double t = L * std::tan(0.5 * k * kPi / M);
            f[k + M] = std::exp(-t * t) * (L * L + t * t);
        }
        std::array<double, 4 * kWeidemanTerms> shifted{};
        for (int i = 0; i < M2; ++i) shifted[i] = f[(i + M) % M2];
        for (int n = 1; n <= kWeidemanTerms; ++n) {
            double re = 0.0;
            for (int i = 0; i < M2; ++i) re += shifted[i] * std::cos(2.0 * kPi * n * i / M2);
            coeff[kWeidemanTerms - n] = re / M2;
        }
    }
};

const WeidemanTable& weideman() {
    static const WeidemanTable table;
    return table;
}

cplx faddeeva_upper(cplx z) {
    const cplx i(0.0, 1.0);
    if (std::abs(z) > 60.0) {
        // Laplace continued fraction, converged to double precision this far out.
        cplx frac = z;
        for (int k = 40; k >= 1; --k) frac = z - (0.5 * k) / frac;
        return i / (std::sqrt(kPi) * frac);
    }
    const auto& tab = weideman();
    const cplx denom = tab.L - i * z;
    const cplx Z = (tab.L + i * z) / denom;
    cplx p = 0.0;
    for (double a : tab.coeff) p = p * Z + a;
    return 2.0 * p / (denom * denom) + (1.0 / std::sqrt(kPi)) / denom;
}

}  // namespace

cplx faddeeva_w(cplx z) {
    if (z.imag() >= 0.0) return faddeeva_upper(z);
    return 2.0 * std::exp(-z * z) - faddeeva_upper(-z);
}

GaussLegendreRule gauss_legendre(std::size_t n) {
    if (n == 0) throw DomainError("gauss_legendre: n must be positive");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0;
        double p1 = x;
        for (std::size_t k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        if (n == 1) p0 = 1.0;
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace photon_ledger
