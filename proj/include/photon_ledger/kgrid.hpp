#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <string>
#include <type_traits>
#include <vector>

#include "photon_ledger/errors.hpp"
#include "photon_ledger/parallel.hpp"
#include "photon_ledger/types.hpp"

namespace photon_ledger {

enum class RadialMap { linear, log };

std::string to_string(RadialMap map);
RadialMap radial_map_from_string(const std::string& name);

struct KGridSpec {
    double k_min = 0.0;  // rad/m
    double k_max = 0.0;  // rad/m
    std::size_t n_k = 128;
    std::size_t n_theta = 64;
    std::size_t n_phi = 16;
    RadialMap radial_map = RadialMap::log;

    /// All violations, empty when the spec is usable.
    std::vector<std::string> violations() const;
};

struct Cutoffs {
    double k_min = 0.0;
    double k_max = 0.0;
};

/// One quadrature node of the spherical product grid.
struct KNode {
    std::size_t index = 0;
    std::size_t i_k = 0;
    std::size_t i_theta = 0;
    std::size_t i_phi = 0;
    double k = 0.0;
    double cos_theta = 0.0;
    double sin_theta = 0.0;
    double phi = 0.0;
    double weight = 0.0;  // d^3k weight, includes k^2

    Vec3 direction() const {
        return {sin_theta * std::cos(phi), sin_theta * std::sin(phi), cos_theta};
    }
    Vec3 wavevector() const { return k * direction(); }
};

/// Spherical product grid over the shell k_min <= |k| <= k_max.
///
/// Radial nodes are Gauss-Legendre in k (linear map) or in ln k (log map),
/// polar nodes Gauss-Legendre in cos(theta), azimuthal nodes uniform with
/// trapezoidal weights starting at phi = 0. With n_phi = 1 the single
/// azimuthal node sits at phi = 0 with weight 2 pi (meridian plane).
///
/// Node index order is (i_k, i_theta, i_phi) with i_phi fastest.
class KGrid {
public:
    explicit KGrid(const KGridSpec& spec);

    const KGridSpec& spec() const noexcept { return spec_; }
    Cutoffs cutoffs() const noexcept { return {spec_.k_min, spec_.k_max}; }

    std::size_t n_k() const noexcept { return k_.size(); }
    std::size_t n_theta() const noexcept { return cos_theta_.size(); }
    std::size_t n_phi() const noexcept { return phi_.size(); }
    std::size_t size() const noexcept { return n_k() * n_theta() * n_phi(); }
    bool is_meridian() const noexcept { return n_phi() == 1; }

    const std::vector<double>& radial_nodes() const noexcept { return k_; }
    /// Weights for the 1D integral over dk (no k^2 factor).
    const std::vector<double>& radial_weights() const noexcept { return w_k_; }
    const std::vector<double>& cos_theta() const noexcept { return cos_theta_; }
    const std::vector<double>& sin_theta() const noexcept { return sin_theta_; }
    const std::vector<double>& theta_weights() const noexcept { return w_theta_; }
    const std::vector<double>& phi_nodes() const noexcept { return phi_; }
    const std::vector<double>& phi_weights() const noexcept { return w_phi_; }

    KNode node(std::size_t index) const;
    std::size_t index(std::size_t i_k, std::size_t i_theta, std::size_t i_phi) const noexcept {
        return (i_k * n_theta() + i_theta) * n_phi() + i_phi;
    }

private:
    KGridSpec spec_;
    std::vector<double> k_, w_k_;
    std::vector<double> cos_theta_, sin_theta_, w_theta_;
    std::vector<double> phi_, w_phi_;
};

KGrid build_kgrid(const KGridSpec& spec);

// ---------------------------------------------------------------------------
// Deterministic reduction.
//
// The index range is cut into fixed blocks of kReductionBlock elements. Each
// block is summed pairwise in index order, then the block partials are
// combined pairwise in block order. Block boundaries do not depend on the
// worker count, so the result is bit-identical for any number of threads.

inline constexpr std::size_t kReductionBlock = 2048;

namespace detail {

template <class T>
T zero_like() {
    if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, cplx>) {
        return T{};
    } else {
        return T::Zero();
    }
}

template <class T>
T pairwise(const T* values, std::size_t n) {
    if (n == 0) return zero_like<T>();
    if (n == 1) return values[0];
    if (n <= 8) {
        T acc = values[0];
        for (std::size_t i = 1; i < n; ++i) acc = acc + values[i];
        return acc;
    }
    const std::size_t half = n / 2;
    return T(pairwise(values, half) + pairwise(values + half, n - half));
}

}  // namespace detail

/// Sum of term(i) over i in [0, count), deterministic for any thread count.
template <class T, class Term>
T deterministic_sum(std::size_t count, Term&& term) {
    const std::size_t blocks = (count + kReductionBlock - 1) / kReductionBlock;
    std::vector<T> partial(blocks, detail::zero_like<T>());
    parallel_for(blocks, [&](std::size_t b) {
        const std::size_t begin = b * kReductionBlock;
        const std::size_t end = std::min(count, begin + kReductionBlock);
        std::vector<T> local;
        local.reserve(end - begin);
        for (std::size_t i = begin; i < end; ++i) local.push_back(term(i));
        partial[b] = detail::pairwise(local.data(), local.size());
    });
    return detail::pairwise(partial.data(), partial.size());
}

// ---------------------------------------------------------------------------

template <class T>
struct IntegrationReport {
    T value{};
    /// Bound on accumulated rounding plus, when requested through
    /// integrate_refined, the difference to a refined grid.
    double estimated_error = 0.0;
    KGridSpec grid;
    Cutoffs cutoffs;
    std::size_t nodes = 0;
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const cplx& v) { return std::abs(v); }
template <class D>
double magnitude(const Eigen::MatrixBase<D>& v) { return v.norm(); }

inline bool all_finite(double v) { return std::isfinite(v); }
inline bool all_finite(const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }
template <class D>
bool all_finite(const Eigen::MatrixBase<D>& v) { return v.allFinite(); }

[[noreturn]] void throw_non_finite(const KGrid& grid, std::size_t index);

}  // namespace detail

/// Weighted node sum of f over the grid. f receives a KNode and returns a
/// double, complex, Vec3 or CVec3. A non-finite value at any node aborts with
/// NonFiniteError naming the node.
template <class F>
auto integrate(F&& f, const KGrid& grid) {
    using T = std::decay_t<decltype(f(std::declval<KNode>()))>;
    struct Pair {
        T value;
        double abs;
        Pair operator+(const Pair& o) const { return {T(value + o.value), abs + o.abs}; }
        static Pair Zero() { return {detail::zero_like<T>(), 0.0}; }
    };
    const Pair total = deterministic_sum<Pair>(grid.size(), [&](std::size_t i) {
        const KNode node = grid.node(i);
        const T v = f(node);
        if (!detail::all_finite(v)) detail::throw_non_finite(grid, i);
        return Pair{T(node.weight * v), node.weight * detail::magnitude(v)};
    });
    IntegrationReport<T> report;
    report.value = total.value;
    report.estimated_error =
        std::log2(static_cast<double>(grid.size()) + 1.0) * std::numeric_limits<double>::epsilon() * total.abs;
    report.grid = grid.spec();
    report.cutoffs = grid.cutoffs();
    report.nodes = grid.size();
    return report;
}

/// integrate on spec and on a grid with doubled radial and polar counts; the
/// finer value is returned with |fine - coarse| folded into the error.
template <class F>
auto integrate_refined(F&& f, const KGridSpec& spec) {
    const KGrid coarse(spec);
    KGridSpec fine_spec = spec;
    fine_spec.n_k *= 2;
    fine_spec.n_theta *= 2;
    const KGrid fine(fine_spec);
    auto a = integrate(f, coarse);
    auto b = integrate(f, fine);
    b.estimated_error += detail::magnitude(b.value - a.value);
    return b;
}

}  // namespace photon_ledger
