#include "photon_ledger/kgrid.hpp"

#include <atomic>
#include <cstdio>

#include <omp.h>

#include "photon_ledger/constants.hpp"
#include "photon_ledger/special_functions.hpp"

namespace photon_ledger {

namespace {
std::atomic<int> g_threads{0};
}

void set_thread_count(int threads) { g_threads.store(threads < 0 ? 0 : threads); }

int thread_count() {
    const int t = g_threads.load();
    return t > 0 ? t : omp_get_max_threads();
}

namespace detail {

void parallel_for_impl(std::size_t count, void* ctx, void (*body)(void*, std::size_t)) {
    const int threads = thread_count();
    if (threads <= 1 || count <= 1 || omp_in_parallel()) {
        for (std::size_t i = 0; i < count; ++i) body(ctx, i);
        return;
    }
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long long i = 0; i < n; ++i) body(ctx, static_cast<std::size_t>(i));
}

void throw_non_finite(const KGrid& grid, std::size_t index) {
    const KNode n = grid.node(index);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "non-finite integrand at node %zu (k=%.17g rad/m, cos_theta=%.17g, phi=%.17g)", index, n.k,
                  n.cos_theta, n.phi);
    throw NonFiniteError(index, buf);
}

}  // namespace detail

std::string to_string(RadialMap map) { return map == RadialMap::log ? "log" : "linear"; }

RadialMap radial_map_from_string(const std::string& name) {
    if (name == "log") return RadialMap::log;
    if (name == "linear") return RadialMap::linear;
    throw ValidationError({"grid.radial_map: expected \"linear\" or \"log\", got \"" + name + "\""});
}

std::vector<std::string> KGridSpec::violations() const {
    std::vector<std::string> out;
    if (!(std::isfinite(k_min) && k_min > 0.0)) out.push_back("grid.k_min: must be finite and > 0");
    if (!(std::isfinite(k_max) && k_max > 0.0)) out.push_back("grid.k_max: must be finite and > 0");
    if (std::isfinite(k_min) && std::isfinite(k_max) && !(k_min < k_max))
        out.push_back("grid.k_min: must be smaller than grid.k_max");
    if (n_k < 8) out.push_back("grid.n_k: must be >= 8");
    if (n_theta < 4) out.push_back("grid.n_theta: must be >= 4");
    if (n_phi != 1 && n_phi < 4) out.push_back("grid.n_phi: must be 1 (meridian) or >= 4");
    return out;
}

KGrid::KGrid(const KGridSpec& spec) : spec_(spec) {
    if (auto v = spec.violations(); !v.empty()) throw ValidationError(std::move(v));

    const auto radial = gauss_legendre(spec.n_k);
    k_.resize(spec.n_k);
    w_k_.resize(spec.n_k);
    if (spec.radial_map == RadialMap::linear) {
        const double mid = 0.5 * (spec.k_max + spec.k_min);
        const double half = 0.5 * (spec.k_max - spec.k_min);
        for (std::size_t i = 0; i < spec.n_k; ++i) {
            k_[i] = mid + half * radial.nodes[i];
            w_k_[i] = half * radial.weights[i];
        }
    } else {
        const double a = std::log(spec.k_min);
        const double b = std::log(spec.k_max);
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        for (std::size_t i = 0; i < spec.n_k; ++i) {
            k_[i] = std::exp(mid + half * radial.nodes[i]);
            w_k_[i] = half * radial.weights[i] * k_[i];
        }
    }

    const auto polar = gauss_legendre(spec.n_theta);
    cos_theta_ = polar.nodes;
    w_theta_ = polar.weights;
    sin_theta_.resize(cos_theta_.size());
    for (std::size_t j = 0; j < cos_theta_.size(); ++j)
        sin_theta_[j] = std::sqrt((1.0 - cos_theta_[j]) * (1.0 + cos_theta_[j]));

    phi_.resize(spec.n_phi);
    w_phi_.assign(spec.n_phi, 2.0 * kPi / static_cast<double>(spec.n_phi));
    for (std::size_t l = 0; l < spec.n_phi; ++l) phi_[l] = 2.0 * kPi * static_cast<double>(l) / spec.n_phi;
}

KNode KGrid::node(std::size_t index) const {
    KNode n;
    n.index = index;
    n.i_phi = index % n_phi();
    const std::size_t rest = index / n_phi();
    n.i_theta = rest % n_theta();
    n.i_k = rest / n_theta();
    n.k = k_[n.i_k];
    n.cos_theta = cos_theta_[n.i_theta];
    n.sin_theta = sin_theta_[n.i_theta];
    n.phi = phi_[n.i_phi];
    n.weight = w_k_[n.i_k] * n.k * n.k * w_theta_[n.i_theta] * w_phi_[n.i_phi];
    return n;
}

KGrid build_kgrid(const KGridSpec& spec) { return KGrid(spec); }

}  // namespace photon_ledger
