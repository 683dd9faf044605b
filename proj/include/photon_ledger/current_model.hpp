#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "photon_ledger/types.hpp"

namespace photon_ledger {

// ---------------------------------------------------------------------------
// Temporal profiles. Every source is separable, j(x, t) = j(x) f(t), with a
// real profile |f| <= 1.

struct StaticProfile {};

/// f(t) = exp(-(t - t0)^2 / (2 sigma^2))
struct GaussianPulse {
    double t0 = 0.0;
    double sigma = 0.0;
};

/// f(t) = Phi((t - t_on) / ramp_sigma) cos(omega (t - t_on)), Phi the normal CDF.
/// The drive is integrated from the window start t_on - 8 ramp_sigma.
struct TruncatedHarmonic {
    double omega = 0.0;
    double t_on = 0.0;
    double ramp_sigma = 0.0;

    double window_start() const { return t_on - 8.0 * ramp_sigma; }
};

using TemporalProfile = std::variant<StaticProfile, GaussianPulse, TruncatedHarmonic>;

double profile_value(const TemporalProfile& profile, double t);
bool is_static(const TemporalProfile& profile);
std::string profile_name(const TemporalProfile& profile);

// ---------------------------------------------------------------------------
// Geometries.

/// Thin circular wire. core_radius > 0 smears the wire with an isotropic
/// Gaussian of that standard deviation, which multiplies j(k) by
/// exp(-k^2 core_radius^2 / 2); 0 is the ideal thin wire.
struct CircularLoop {
    double current = 0.0;  // A
    double radius = 0.0;   // m
    Vec3 center = Vec3::Zero();
    Vec3 axis = Vec3::UnitZ();
    double core_radius = 0.0;  // m
};

struct HertzianDipole {
    Vec3 moment = Vec3::Zero();  // A m
    Vec3 position = Vec3::Zero();
};

/// Current density samples (A/m^2) on a uniform grid, index (ix*ny + iy)*nz + iz.
struct SampledCurrent {
    Vec3 origin = Vec3::Zero();
    double spacing = 0.0;
    std::size_t nx = 0, ny = 0, nz = 0;
    std::vector<Vec3> values;

    Vec3 position(std::size_t ix, std::size_t iy, std::size_t iz) const {
        return origin + spacing * Vec3(double(ix), double(iy), double(iz));
    }
};

using Geometry = std::variant<CircularLoop, HertzianDipole, SampledCurrent>;

struct CurrentSource {
    Geometry geometry;
    TemporalProfile profile = StaticProfile{};

    std::vector<std::string> violations() const;
    /// Throws ValidationError listing every violated invariant.
    void validate() const;
    /// True when j(R k) = R j(k) for every rotation R about the z axis, which
    /// makes meridian-plane (n_phi = 1) grids exact for this source.
    bool axisymmetric_about_z() const;
    /// Returns a copy with every current scaled by factor.
    CurrentSource scaled(double factor) const;
    std::string describe() const;
};

/// Top-hat regularized loop in the xy plane sampled on n^3 points covering
/// [-half_width, half_width]^3. The wire cross-section is width_cells grid
/// cells wide in both rho and z, and the samples are normalized so that
/// sum |j| dV = I 2 pi R.
SampledCurrent sample_regularized_loop(double current, double radius, std::size_t n, double half_width,
                                       double width_cells = 2.0);

// ---------------------------------------------------------------------------

/// j(k) under the symmetric convention j(k) = (2 pi)^(-3/2) int d^3x j(x) exp(-i k.x),
/// in A m. When transverse() is set, evaluation returns (1 - k^ k^) j(k).
class SpectralCurrent {
public:
    using Evaluator = std::function<CVec3(const Vec3&)>;

    SpectralCurrent(Evaluator eval, bool transverse) : eval_(std::move(eval)), transverse_(transverse) {}

    CVec3 operator()(const Vec3& k) const;
    bool transverse() const noexcept { return transverse_; }
    SpectralCurrent projected() const { return SpectralCurrent(eval_, true); }

private:
    Evaluator eval_;
    bool transverse_;
};

SpectralCurrent spectral_transform(const CurrentSource& source);

/// (1 - k^ (x) k^) j. Throws DomainError for k = 0.
CVec3 transverse_project(const CVec3& j, const Vec3& k);

/// int_{-inf}^{t} dt' exp(i c (k - i eps) t') f(t')   (seconds)
///
/// Static:     closed form exp(i c (k - i eps) t) / (i c (k - i eps))
/// Gaussian:   closed form through the Faddeeva function
/// Harmonic:   adaptive Gauss-Kronrod over [window_start, t]
///
/// Requires k > 0 and eps >= 0. A harmonic drive with eps = 0 and ck equal to
/// omega raises ResonanceError.
cplx temporal_spectrum(const TemporalProfile& profile, double k, double t, double eps);

/// Adaptive 7/15-point Gauss-Kronrod for complex integrands on [a, b],
/// pre-split into `panels` equal pieces.
cplx adaptive_gauss_kronrod(const std::function<cplx(double)>& f, double a, double b, double abs_tol,
                            double rel_tol, std::size_t panels = 1);

}  // namespace photon_ledger
