#include "photon_ledger/current_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "photon_ledger/constants.hpp"
#include "photon_ledger/errors.hpp"
#include "photon_ledger/special_functions.hpp"

namespace photon_ledger {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const double kInvSqrt2Pi3 = std::pow(2.0 * kPi, -1.5);

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

bool finite3(const Vec3& v) { return v.allFinite(); }

}  // namespace

double profile_value(const TemporalProfile& profile, double t) {
    return std::visit(overloaded{
                          [](const StaticProfile&) { return 1.0; },
                          [t](const GaussianPulse& g) {
                              const double u = (t - g.t0) / g.sigma;
                              return std::exp(-0.5 * u * u);
                          },
                          [t](const TruncatedHarmonic& h) {
                              return normal_cdf((t - h.t_on) / h.ramp_sigma) * std::cos(h.omega * (t - h.t_on));
                          },
                      },
                      profile);
}

bool is_static(const TemporalProfile& profile) { return std::holds_alternative<StaticProfile>(profile); }

std::string profile_name(const TemporalProfile& profile) {
    return std::visit(overloaded{
                          [](const StaticProfile&) { return std::string("static"); },
                          [](const GaussianPulse&) { return std::string("gaussian_pulse"); },
                          [](const TruncatedHarmonic&) { return std::string("truncated_harmonic"); },
                      },
                      profile);
}

std::vector<std::string> CurrentSource::violations() const {
    std::vector<std::string> out;
    std::visit(overloaded{
                   [&](const CircularLoop& l) {
                       if (!std::isfinite(l.current) || l.current == 0.0)
                           out.push_back("source.current: must be finite and nonzero");
                       if (!(std::isfinite(l.radius) && l.radius > 0.0))
                           out.push_back("source.radius: must be finite and > 0");
                       if (!finite3(l.center)) out.push_back("source.center: must be finite");
                       if (!finite3(l.axis) || l.axis.norm() == 0.0)
                           out.push_back("source.axis: must be a finite nonzero vector");
                       if (!(std::isfinite(l.core_radius) && l.core_radius >= 0.0))
                           out.push_back("source.core_radius: must be finite and >= 0");
                   },
                   [&](const HertzianDipole& d) {
                       if (!finite3(d.moment)) out.push_back("source.moment: must be finite");
                       if (!finite3(d.position)) out.push_back("source.position: must be finite");
                   },
                   [&](const SampledCurrent& s) {
                       if (s.nx < 2 || s.ny < 2 || s.nz < 2)
                           out.push_back("source.samples: need at least 2 points per axis");
                       if (!(std::isfinite(s.spacing) && s.spacing > 0.0))
                           out.push_back("source.spacing: must be finite and > 0");
                       if (s.values.size() != s.nx * s.ny * s.nz)
                           out.push_back("source.samples: value count does not match grid dimensions");
                       for (const auto& v : s.values)
                           if (!finite3(v)) {
                               out.push_back("source.samples: values must be finite");
                               break;
                           }
                   },
               },
               geometry);
    std::visit(overloaded{
                   [](const StaticProfile&) {},
                   [&](const GaussianPulse& g) {
                       if (!std::isfinite(g.t0)) out.push_back("source.profile.t0: must be finite");
                       if (!(std::isfinite(g.sigma) && g.sigma > 0.0))
                           out.push_back("source.profile.sigma: must be finite and > 0");
                   },
                   [&](const TruncatedHarmonic& h) {
                       if (!(std::isfinite(h.omega) && h.omega > 0.0))
                           out.push_back("source.profile.omega: must be finite and > 0");
                       if (!std::isfinite(h.t_on)) out.push_back("source.profile.t_on: must be finite");
                       if (!(std::isfinite(h.ramp_sigma) && h.ramp_sigma > 0.0))
                           out.push_back("source.profile.ramp_sigma: must be finite and > 0");
                   },
               },
               profile);
    return out;
}

void CurrentSource::validate() const {
    if (auto v = violations(); !v.empty()) throw ValidationError(std::move(v));
}

bool CurrentSource::axisymmetric_about_z() const {
    constexpr double tol = 1e-14;
    return std::visit(overloaded{
                          [](const CircularLoop& l) {
                              const Vec3 a = l.axis.normalized();
                              return std::hypot(a.x(), a.y()) <= tol &&
                                     std::hypot(l.center.x(), l.center.y()) <= tol * l.radius;
                          },
                          [](const HertzianDipole& d) {
                              return std::hypot(d.moment.x(), d.moment.y()) <= tol * d.moment.norm() &&
                                     d.position.x() == 0.0 && d.position.y() == 0.0;
                          },
                          [](const SampledCurrent&) { return false; },
                      },
                      geometry);
}

CurrentSource CurrentSource::scaled(double factor) const {
    CurrentSource out = *this;
    std::visit(overloaded{
                   [&](CircularLoop& l) { l.current *= factor; },
                   [&](HertzianDipole& d) { d.moment *= factor; },
                   [&](SampledCurrent& s) {
                       for (auto& v : s.values) v *= factor;
                   },
               },
               out.geometry);
    return out;
}

std::string CurrentSource::describe() const {
    std::ostringstream os;
    os.precision(17);
    std::visit(overloaded{
                   [&](const CircularLoop& l) {
                       os << "circular_loop(I=" << l.current << " A, R=" << l.radius << " m";
                       if (l.core_radius > 0.0) os << ", core=" << l.core_radius << " m";
                       os << ")";
                   },
                   [&](const HertzianDipole& d) {
                       os << "hertzian_dipole(j0=[" << d.moment.x() << "," << d.moment.y() << ","
                          << d.moment.z() << "] A m)";
                   },
                   [&](const SampledCurrent& s) {
                       os << "sampled_current(" << s.nx << "x" << s.ny << "x" << s.nz << ", h=" << s.spacing
                          << " m)";
                   },
               },
               geometry);
    os << "/" << profile_name(profile);
    return os.str();
}

SampledCurrent sample_regularized_loop(double current, double radius, std::size_t n, double half_width,
                                       double width_cells) {
    if (n < 2 || !(radius > 0.0) || !(half_width > radius))
        throw ValidationError({"sampled loop: need n >= 2, radius > 0 and half_width > radius"});
    SampledCurrent s;
    s.nx = s.ny = s.nz = n;
    s.spacing = 2.0 * half_width / static_cast<double>(n - 1);
    s.origin = Vec3::Constant(-half_width);
    s.values.assign(n * n * n, Vec3::Zero());
    const double half_w = 0.5 * width_cells * s.spacing;
    double total = 0.0;
    for (std::size_t ix = 0; ix < n; ++ix)
        for (std::size_t iy = 0; iy < n; ++iy)
            for (std::size_t iz = 0; iz < n; ++iz) {
                const Vec3 x = s.position(ix, iy, iz);
                const double rho = std::hypot(x.x(), x.y());
                if (rho == 0.0 || std::abs(rho - radius) > half_w || std::abs(x.z()) > half_w) continue;
                s.values[(ix * n + iy) * n + iz] = Vec3(-x.y() / rho, x.x() / rho, 0.0);
                total += 1.0;
            }
    if (total == 0.0) throw ValidationError({"sampled loop: wire does not intersect any sample point"});
    const double dv = s.spacing * s.spacing * s.spacing;
    const double scale = current * 2.0 * kPi * radius / (total * dv);
    for (auto& v : s.values) v *= scale;
    return s;
}

CVec3 transverse_project(const CVec3& j, const Vec3& k) {
    const double kk = k.squaredNorm();
    if (!(kk > 0.0)) throw DomainError("transverse_project: undefined at k = 0");
    const Vec3 khat = k / std::sqrt(kk);
    return j - to_complex(khat) * dot_real(khat, j);
}

CVec3 SpectralCurrent::operator()(const Vec3& k) const {
    CVec3 j = eval_(k);
    if (transverse_) j = transverse_project(j, k);
    return j;
}

namespace {

struct SampledData {
    std::vector<Vec3> positions;
    std::vector<Vec3> values;
    double spacing;
    double volume;
};

}  // namespace

SpectralCurrent spectral_transform(const CurrentSource& source) {
    source.validate();
    return std::visit(
        overloaded{
            [](const CircularLoop& l) {
                const Vec3 axis = l.axis.normalized();
                const double amp = l.current * l.radius / std::sqrt(2.0 * kPi);
                const Vec3 center = l.center;
                const double radius = l.radius;
                const double core = l.core_radius;
                return SpectralCurrent(
                    [=](const Vec3& k) -> CVec3 {
                        const Vec3 a_cross_k = axis.cross(k);
                        const double k_perp = a_cross_k.norm();
                        if (k_perp == 0.0) return CVec3::Zero();
                        const Vec3 e_phi = a_cross_k / k_perp;
                        cplx coeff = cplx(0.0, -amp * bessel_j1(k_perp * radius));
                        if (core > 0.0) coeff *= std::exp(-0.5 * k.squaredNorm() * core * core);
                        if (center.squaredNorm() > 0.0) coeff *= std::polar(1.0, -k.dot(center));
                        return coeff * to_complex(e_phi);
                    },
                    false);
            },
            [](const HertzianDipole& d) {
                const Vec3 moment = d.moment;
                const Vec3 position = d.position;
                return SpectralCurrent(
                    [=](const Vec3& k) -> CVec3 {
                        return kInvSqrt2Pi3 * std::polar(1.0, -k.dot(position)) * to_complex(moment);
                    },
                    false);
            },
            [](const SampledCurrent& s) {
                auto data = std::make_shared<SampledData>();
                data->spacing = s.spacing;
                data->volume = s.spacing * s.spacing * s.spacing;
                for (std::size_t ix = 0; ix < s.nx; ++ix)
                    for (std::size_t iy = 0; iy < s.ny; ++iy)
                        for (std::size_t iz = 0; iz < s.nz; ++iz) {
                            const Vec3& v = s.values[(ix * s.ny + iy) * s.nz + iz];
                            if (v.squaredNorm() == 0.0) continue;
                            data->positions.push_back(s.position(ix, iy, iz));
                            data->values.push_back(v);
                        }
                return SpectralCurrent(
                    [data](const Vec3& k) -> CVec3 {
                        if (k.norm() * data->spacing > kPi) {
                            char buf[200];
                            std::snprintf(buf, sizeof buf,
                                          "sampled current cannot resolve |k| = %.6g rad/m (|k| h = %.4g > pi)",
                                          k.norm(), k.norm() * data->spacing);
                            throw ResolutionError(buf);
                        }
                        CVec3 sum = CVec3::Zero();
                        for (std::size_t n = 0; n < data->positions.size(); ++n)
                            sum += std::polar(1.0, -k.dot(data->positions[n])) * to_complex(data->values[n]);
                        return (kInvSqrt2Pi3 * data->volume) * sum;
                    },
                    false);
            },
        },
        source.geometry);
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkResult {
    cplx value;
    double error;
};

GkResult gk15(const std::function<cplx(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const cplx fc = f(c);
    cplx kronrod = fc * kWgk[7];
    cplx gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const cplx sum = f(c - dx) + f(c + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) gauss += kWg[j / 2] * sum;
    }
    return {kronrod * h, std::abs((kronrod - gauss) * h)};
}

cplx gk_adaptive(const std::function<cplx(double)>& f, double a, double b, double abs_tol, double rel_tol,
                 int depth) {
    const GkResult r = gk15(f, a, b);
    if (r.error <= std::max(abs_tol, rel_tol * std::abs(r.value)) || depth >= 40) return r.value;
    const double m = 0.5 * (a + b);
    return gk_adaptive(f, a, m, 0.5 * abs_tol, rel_tol, depth + 1) +
           gk_adaptive(f, m, b, 0.5 * abs_tol, rel_tol, depth + 1);
}

}  // namespace

cplx adaptive_gauss_kronrod(const std::function<cplx(double)>& f, double a, double b, double abs_tol,
                            double rel_tol, std::size_t panels) {
    if (panels == 0) panels = 1;
    const double width = (b - a) / static_cast<double>(panels);
    cplx total = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = a + width * static_cast<double>(p);
        const double hi = p + 1 == panels ? b : lo + width;
        total += gk_adaptive(f, lo, hi, abs_tol / static_cast<double>(panels), rel_tol, 0);
    }
    return total;
}

cplx temporal_spectrum(const TemporalProfile& profile, double k, double t, double eps) {
    if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("temporal_spectrum: k must be finite and > 0");
    if (!(eps >= 0.0) || !std::isfinite(eps)) throw DomainError("temporal_spectrum: eps must be finite and >= 0");
    const double c = PhysicalConstants::c;
    const cplx omega(c * k, -c * eps);  // c (k - i eps)
    const cplx i(0.0, 1.0);

    return std::visit(
        overloaded{
            [&](const StaticProfile&) { return std::exp(i * omega * t) / (i * omega); },
            [&](const GaussianPulse& g) {
                const double s = g.sigma;
                const double tau = (t - g.t0) / s;
                const cplx complete = s * std::sqrt(2.0 * kPi) * std::exp(i * omega * g.t0 - 0.5 * omega * omega * s * s);
                if (tau > 38.0) return complete;
                // w argument for the partial integral; see header for the closed form.
                const cplx arg = (-omega * s - i * tau) / std::sqrt(2.0);
                const cplx pref = s * std::sqrt(0.5 * kPi) * std::exp(i * omega * t - 0.5 * tau * tau);
                if (arg.imag() >= 0.0) return pref * faddeeva_w(arg);
                return complete - pref * faddeeva_w(-arg);
            },
            [&](const TruncatedHarmonic& h) {
                if (eps == 0.0 && std::abs(c * k - h.omega) <= 1e-12 * h.omega) {
                    char buf[160];
                    std::snprintf(buf, sizeof buf,
                                  "harmonic drive at resonance (c k = omega = %.6g rad/s) with eps = 0", h.omega);
                    throw ResonanceError(buf);
                }
                const double a = h.window_start();
                if (t <= a) return cplx(0.0);
                const double span = t - a;
                const double cycles = span * (c * k + h.omega) / (2.0 * kPi);
                const auto panels = static_cast<std::size_t>(std::clamp(std::ceil(cycles), 1.0, 2.0e6));
                const TruncatedHarmonic drive = h;
                auto integrand = [&](double tp) { return std::exp(i * omega * tp) * profile_value(drive, tp); };
                const double scale = 1.0 / std::max(std::abs(c * k - h.omega), 1e-300);
                return adaptive_gauss_kronrod(integrand, a, t, 1e-13 * std::min(scale, span), 1e-11, panels);
            },
        },
        profile);
}

}  // namespace photon_ledger
