#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "photon_ledger/constants.hpp"
#include "photon_ledger/current_model.hpp"
#include "photon_ledger/kgrid.hpp"

namespace photon_ledger {

/// Phase c k t of a photon mode. Every place that rotates by exp(+-i c k t)
/// goes through this so that the two rotations cancel to rounding.
inline double mode_phase(double k, double t) { return PhysicalConstants::c * k * t; }

/// Coherent-state parameter xi(k, t) sampled on a KGrid.
///
/// For the separable sources supported here xi factors as
/// xi(k, t) = temporal(|k|, t) * j_perp(k); the scalar factor is kept per
/// radial node alongside the unprojected spectral current j(k) per node.
struct PhotonAmplitude {
    std::shared_ptr<const KGrid> grid;
    double time = 0.0;             // s
    double eps = 0.0;              // 1/s
    bool stationary = false;       // static profile: xi(k, t) = xi(k) exp(i c k t)
    bool axisymmetric = false;     // xi(R k) = R xi(k) for rotations about z
    double profile_value = 1.0;    // f(time)
    std::string source;

    std::vector<CVec3> xi;         // m^(3/2), per node
    std::vector<CVec3> current;    // j(k), A m, per node
    std::vector<cplx> temporal;    // per radial node

    std::size_t size() const noexcept { return xi.size(); }
};

struct StateSummary {
    double N = 0.0;            // photons
    double H_gamma = 0.0;      // J
    double V = 0.0;            // J
    double E = 0.0;            // J, H_gamma + V
    double phase_slope = 0.0;  // J, dPhi/dt from the |j_perp|^2 route
    double time = 0.0;
    bool stationary = false;
    Cutoffs cutoffs;
    KGridSpec grid;
    std::size_t nodes = 0;
};

/// xi(k) = sqrt(mu0 / (2 hbar c k)) j_perp(k) / k at t = 0 (eps -> 0 taken analytically).
PhotonAmplitude amplitude_static(const CurrentSource& source, std::shared_ptr<const KGrid> grid);

/// Stationary xi at a single wavevector, same formula as amplitude_static.
CVec3 static_amplitude_at(const CurrentSource& source, const Vec3& k);

/// xi(k, t) = i sqrt(mu0 c / (2 hbar k)) temporal_spectrum(profile, k, t, eps) j_perp(k).
/// Static profiles return amplitude_static rotated by exp(i c k t).
PhotonAmplitude amplitude_time_dependent(const CurrentSource& source, double t, std::shared_ptr<const KGrid> grid,
                                         double eps = 0.0);

/// n(k) = |xi(k, t)|^2 per node, m^3.
std::vector<double> photon_density(const PhotonAmplitude& xi);

StateSummary summarize(const PhotonAmplitude& xi);

struct PhaseOptions {
    /// Lower limit of the time integration for non-static profiles. Defaults
    /// to t0 - 8 sigma (Gaussian) or the drive's window start (harmonic).
    std::optional<double> t_start;
};

struct PhaseResult {
    double phi = 0.0;        // J s, Phi(t)
    double phase_rad = 0.0;  // Phi(t) / hbar
    double dphi_dt = 0.0;    // J
    double t = 0.0;
    double t_start = 0.0;
    Cutoffs cutoffs;
};

/// Static: Phi(t) = E t with E = -int d^3k mu0 |j_perp(k)|^2 / (2 k^2).
/// Otherwise dPhi/dt(t') = -f(t') int d^3k (mu0 c / 2k) |j_perp|^2 Im[exp(i c k t') conj F(k, t')]
/// is integrated from t_start to t.
PhaseResult phase(const CurrentSource& source, double t, const KGrid& grid, const PhaseOptions& options = {});

/// Radial integration of dPhi/dt at a single time; exposed for tests.
double phase_rate(const CurrentSource& source, double t, const KGrid& grid);

}  // namespace photon_ledger
