#include "photon_ledger/coherent_state.hpp"

#include <cmath>

#include "photon_ledger/errors.hpp"

namespace photon_ledger {

namespace {

using PC = PhysicalConstants;

void check_grid(const CurrentSource& source, const KGrid& grid) {
    if (!(grid.radial_nodes().front() > 0.0)) throw DomainError("k-grid contains k <= 0");
    if (grid.is_meridian() && !source.axisymmetric_about_z())
        throw ValidationError({"grid.n_phi: a meridian grid (n_phi = 1) requires a source axisymmetric about z"});
}

// Evaluates j(k) at every node.
std::vector<CVec3> spectral_on_grid(const CurrentSource& source, const KGrid& grid) {
    const SpectralCurrent j = spectral_transform(source);
    std::vector<CVec3> out(grid.size());
    const std::size_t per_k = grid.n_theta() * grid.n_phi();
    parallel_for(grid.n_k(), [&](std::size_t ik) {
        for (std::size_t r = 0; r < per_k; ++r) {
            const std::size_t idx = ik * per_k + r;
            out[idx] = j(grid.node(idx).wavevector());
        }
    });
    return out;
}

PhotonAmplitude assemble(const CurrentSource& source, std::shared_ptr<const KGrid> grid, std::vector<cplx> temporal,
                         double t, double eps) {
    PhotonAmplitude amp;
    amp.grid = grid;
    amp.time = t;
    amp.eps = eps;
    amp.stationary = is_static(source.profile);
    amp.axisymmetric = source.axisymmetric_about_z();
    amp.profile_value = profile_value(source.profile, t);
    amp.source = source.describe();
    amp.current = spectral_on_grid(source, *grid);
    amp.temporal = std::move(temporal);
    amp.xi.resize(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const KNode node = grid->node(i);
        amp.xi[i] = amp.temporal[node.i_k] * transverse_project(amp.current[i], node.wavevector());
    }
    return amp;
}

double static_prefactor(double k) { return std::sqrt(PC::mu0 / (2.0 * PC::hbar * PC::c * k)) / k; }

}  // namespace

PhotonAmplitude amplitude_static(const CurrentSource& source, std::shared_ptr<const KGrid> grid) {
    source.validate();
    if (!is_static(source.profile)) throw ValidationError({"amplitude_static: source profile must be static"});
    check_grid(source, *grid);
    std::vector<cplx> temporal(grid->n_k());
    for (std::size_t i = 0; i < grid->n_k(); ++i) temporal[i] = static_prefactor(grid->radial_nodes()[i]);
    return assemble(source, grid, std::move(temporal), 0.0, 0.0);
}

CVec3 static_amplitude_at(const CurrentSource& source, const Vec3& k) {
    if (!is_static(source.profile)) throw ValidationError({"static_amplitude_at: source profile must be static"});
    return static_prefactor(k.norm()) * transverse_project(spectral_transform(source)(k), k);
}

PhotonAmplitude amplitude_time_dependent(const CurrentSource& source, double t, std::shared_ptr<const KGrid> grid,
                                         double eps) {
    source.validate();
    check_grid(source, *grid);
    const auto& ks = grid->radial_nodes();
    std::vector<cplx> temporal(ks.size());
    if (is_static(source.profile)) {
        for (std::size_t i = 0; i < ks.size(); ++i)
            temporal[i] = static_prefactor(ks[i]) * std::polar(1.0, mode_phase(ks[i], t));
    } else {
        parallel_for(ks.size(), [&](std::size_t i) {
            const double k = ks[i];
            temporal[i] = cplx(0.0, std::sqrt(PC::mu0 * PC::c / (2.0 * PC::hbar * k))) *
                          temporal_spectrum(source.profile, k, t, eps);
        });
    }
    return assemble(source, grid, std::move(temporal), t, eps);
}

std::vector<double> photon_density(const PhotonAmplitude& xi) {
    std::vector<double> n(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) n[i] = xi.xi[i].squaredNorm();
    return n;
}

StateSummary summarize(const PhotonAmplitude& amp) {
    const KGrid& grid = *amp.grid;
    using Acc = Eigen::Matrix<double, 4, 1>;  // N, H, V, phase slope
    const double f = amp.profile_value;
    const Acc total = deterministic_sum<Acc>(grid.size(), [&](std::size_t i) {
        const KNode node = grid.node(i);
        const double k = node.k;
        const CVec3& xi = amp.xi[i];
        const CVec3& j = amp.current[i];
        const double n = xi.squaredNorm();
        if (!std::isfinite(n)) detail::throw_non_finite(grid, i);
        // <V> per node: -sqrt(hbar mu0 c / 2k) 2 Re[exp(i c k t) xi^* . j] f(t)
        const cplx overlap = std::polar(1.0, mode_phase(k, amp.time)) * xi.dot(j);  // dot conjugates xi
        const double v = -f * std::sqrt(PC::hbar * PC::mu0 * PC::c / (2.0 * k)) * 2.0 * overlap.real();
        const double jperp2 = transverse_project(j, node.wavevector()).squaredNorm();
        double slope;
        if (amp.stationary) {
            slope = -PC::mu0 * jperp2 / (2.0 * k * k);
        } else {
            const cplx F = amp.temporal[node.i_k] / cplx(0.0, std::sqrt(PC::mu0 * PC::c / (2.0 * PC::hbar * k)));
            slope = -f * PC::mu0 * PC::c / (2.0 * k) * jperp2 *
                    (std::polar(1.0, mode_phase(k, amp.time)) * std::conj(F)).imag();
        }
        Acc a;
        a << n, PC::hbar * PC::c * k * n, v, slope;
        return Acc(node.weight * a);
    });
    StateSummary s;
    s.N = total[0];
    s.H_gamma = total[1];
    s.V = total[2];
    s.E = s.H_gamma + s.V;
    s.phase_slope = total[3];
    s.time = amp.time;
    s.stationary = amp.stationary;
    s.cutoffs = grid.cutoffs();
    s.grid = grid.spec();
    s.nodes = grid.size();
    return s;
}

namespace {

// Angular integral of |j_perp|^2 per radial node, times the dk weight and k^2.
std::vector<double> radial_current_weights(const CurrentSource& source, const KGrid& grid) {
    const SpectralCurrent j = spectral_transform(source);
    std::vector<double> g(grid.n_k());
    const std::size_t per_k = grid.n_theta() * grid.n_phi();
    for (std::size_t ik = 0; ik < grid.n_k(); ++ik) {
        g[ik] = deterministic_sum<double>(per_k, [&](std::size_t r) {
            const KNode node = grid.node(ik * per_k + r);
            const Vec3 kv = node.wavevector();
            return node.weight * transverse_project(j(kv), kv).squaredNorm();
        });
    }
    return g;
}

double rate_from_weights(const CurrentSource& source, const KGrid& grid, const std::vector<double>& g, double t) {
    const auto& ks = grid.radial_nodes();
    if (is_static(source.profile)) {
        double sum = 0.0;
        for (std::size_t i = 0; i < ks.size(); ++i) sum += -PC::mu0 * g[i] / (2.0 * ks[i] * ks[i]);
        return sum;
    }
    const double f = profile_value(source.profile, t);
    if (f == 0.0) return 0.0;
    std::vector<double> terms(ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const cplx F = temporal_spectrum(source.profile, ks[i], t, 0.0);
        terms[i] = -PC::mu0 * PC::c / (2.0 * ks[i]) * g[i] * (std::polar(1.0, mode_phase(ks[i], t)) * std::conj(F)).imag();
    }
    return f * detail::pairwise(terms.data(), terms.size());
}

}  // namespace

double phase_rate(const CurrentSource& source, double t, const KGrid& grid) {
    source.validate();
    check_grid(source, grid);
    return rate_from_weights(source, grid, radial_current_weights(source, grid), t);
}

PhaseResult phase(const CurrentSource& source, double t, const KGrid& grid, const PhaseOptions& options) {
    source.validate();
    check_grid(source, grid);
    const auto g = radial_current_weights(source, grid);
    PhaseResult out;
    out.t = t;
    out.cutoffs = grid.cutoffs();
    if (is_static(source.profile)) {
        const double E = rate_from_weights(source, grid, g, t);
        out.t_start = 0.0;
        out.dphi_dt = E;
        out.phi = E * t;
    } else {
        double t_start = 0.0;
        if (options.t_start) {
            t_start = *options.t_start;
        } else if (const auto* gp = std::get_if<GaussianPulse>(&source.profile)) {
            t_start = gp->t0 - 8.0 * gp->sigma;
        } else {
            t_start = std::get<TruncatedHarmonic>(source.profile).window_start();
        }
        out.t_start = t_start;
        out.dphi_dt = rate_from_weights(source, grid, g, t);
        auto rate = [&](double tp) { return cplx(rate_from_weights(source, grid, g, tp)); };
        // Scale for the absolute tolerance: the rate at the profile's peak region.
        double scale = std::abs(out.dphi_dt);
        const double span = std::abs(t - t_start);
        for (int s = 1; s <= 8; ++s)
            scale = std::max(scale, std::abs(rate(t_start + span * s / 8.0).real()));
        out.phi = adaptive_gauss_kronrod(rate, t_start, t, 1e-12 * scale * span, 1e-10, 16).real();
    }
    out.phase_rad = out.phi / PC::hbar;
    return out;
}

}  // namespace photon_ledger
