#include "photon_ledger/classical_oracle.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "photon_ledger/constants.hpp"
#include "photon_ledger/errors.hpp"

namespace photon_ledger {

namespace {

using PC = PhysicalConstants;

struct LoopFrame {
    Vec3 e1, e2;
};

LoopFrame frame_for(const Vec3& axis) {
    const Vec3 n = axis.normalized();
    const Vec3 trial = std::abs(n.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    const Vec3 e1 = (trial - trial.dot(n) * n).normalized();
    return {e1, n.cross(e1)};
}

void check_proximity(const CircularLoop& loop, const Vec3& x) {
    const Vec3 n = loop.axis.normalized();
    const Vec3 d = x - loop.center;
    const double z = d.dot(n);
    const double rho = (d - z * n).norm();
    const double dist = std::hypot(rho - loop.radius, z);
    if (dist < 1e-3 * loop.radius) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "point is %.3g m from the wire (limit %.3g m)", dist, 1e-3 * loop.radius);
        throw ProximityError(buf);
    }
}

// Periodic trapezoid over the loop angle with node doubling. term(phi) is the
// integrand per unit angle; the doubling reuses previous nodes.
OracleResult loop_trapezoid(const std::function<Vec3(double)>& term, double rel_tol, double abs_floor,
                            const char* method) {
    std::size_t n = 64;
    Vec3 sum = Vec3::Zero();
    for (std::size_t i = 0; i < n; ++i) sum += term(2.0 * kPi * double(i) / double(n));
    Vec3 value = sum * (2.0 * kPi / double(n));
    constexpr std::size_t kMaxNodes = std::size_t(1) << 20;
    while (n < kMaxNodes) {
        for (std::size_t i = 0; i < n; ++i) sum += term(2.0 * kPi * (double(i) + 0.5) / double(n));
        n *= 2;
        const Vec3 next = sum * (2.0 * kPi / double(n));
        const double diff = (next - value).norm();
        value = next;
        if (diff <= std::max(rel_tol * value.norm(), abs_floor)) return {value, method, diff};
    }
    throw ResolutionError("loop quadrature did not converge within 2^20 nodes");
}

}  // namespace

double loop_axis_field(double current, double radius, double z) {
    const double r2 = radius * radius + z * z;
    return PC::mu0 * current * radius * radius / (2.0 * r2 * std::sqrt(r2));
}

OracleResult biot_savart(const CurrentSource& source, const Vec3& x, double rel_tol) {
    source.validate();
    if (const auto* loop = std::get_if<CircularLoop>(&source.geometry)) {
        check_proximity(*loop, x);
        const LoopFrame f = frame_for(loop->axis);
        const double pref = PC::mu0 * loop->current * loop->radius / (4.0 * kPi);
        return loop_trapezoid(
            [&](double phi) {
                const double c = std::cos(phi), s = std::sin(phi);
                const Vec3 xp = loop->center + loop->radius * (c * f.e1 + s * f.e2);
                const Vec3 tangent = -s * f.e1 + c * f.e2;
                const Vec3 r = x - xp;
                const double d = r.norm();
                return Vec3(pref * tangent.cross(r) / (d * d * d));
            },
            rel_tol, 0.0, "line_quadrature");
    }
    if (const auto* dip = std::get_if<HertzianDipole>(&source.geometry)) {
        const Vec3 r = x - dip->position;
        const double d = r.norm();
        if (d == 0.0) throw ProximityError("point coincides with the dipole");
        return {PC::mu0 / (4.0 * kPi) * dip->moment.cross(r) / (d * d * d), "closed_form", 0.0};
    }
    const auto& s = std::get<SampledCurrent>(source.geometry);
    const double dv = s.spacing * s.spacing * s.spacing;
    Vec3 b = Vec3::Zero();
    for (std::size_t ix = 0; ix < s.nx; ++ix)
        for (std::size_t iy = 0; iy < s.ny; ++iy)
            for (std::size_t iz = 0; iz < s.nz; ++iz) {
                const Vec3& j = s.values[(ix * s.ny + iy) * s.nz + iz];
                if (j.isZero(0.0)) continue;
                const Vec3 r = x - s.position(ix, iy, iz);
                const double d = r.norm();
                if (d == 0.0) throw ProximityError("point coincides with a current sample");
                b += j.cross(r) * (dv / (d * d * d));
            }
    return {PC::mu0 / (4.0 * kPi) * b, "point_sum", 0.0};
}

OracleResult static_vector_potential(const CurrentSource& source, const Vec3& x, double rel_tol) {
    CurrentSource st = source;
    st.profile = StaticProfile{};
    return retarded_vector_potential(st, x, 0.0, rel_tol, 0.0);
}

OracleResult retarded_vector_potential(const CurrentSource& source, const Vec3& x, double t, double rel_tol,
                                       double abs_floor) {
    source.validate();
    const bool stat = is_static(source.profile);
    auto f = [&](double tr) { return stat ? 1.0 : profile_value(source.profile, tr); };
    const char* method = stat ? "line_quadrature" : "retarded_quadrature";
    if (const auto* loop = std::get_if<CircularLoop>(&source.geometry)) {
        check_proximity(*loop, x);
        const LoopFrame fr = frame_for(loop->axis);
        const double pref = PC::mu0 * loop->current * loop->radius / (4.0 * kPi);
        return loop_trapezoid(
            [&](double phi) {
                const double c = std::cos(phi), s = std::sin(phi);
                const Vec3 xp = loop->center + loop->radius * (c * fr.e1 + s * fr.e2);
                const Vec3 tangent = -s * fr.e1 + c * fr.e2;
                const double d = (x - xp).norm();
                return Vec3(pref * f(t - d / PC::c) / d * tangent);
            },
            rel_tol, abs_floor, method);
    }
    if (const auto* dip = std::get_if<HertzianDipole>(&source.geometry)) {
        const double d = (x - dip->position).norm();
        if (d == 0.0) throw ProximityError("point coincides with the dipole");
        return {PC::mu0 / (4.0 * kPi) * f(t - d / PC::c) / d * dip->moment, "closed_form", 0.0};
    }
    const auto& s = std::get<SampledCurrent>(source.geometry);
    const double dv = s.spacing * s.spacing * s.spacing;
    Vec3 a = Vec3::Zero();
    for (std::size_t ix = 0; ix < s.nx; ++ix)
        for (std::size_t iy = 0; iy < s.ny; ++iy)
            for (std::size_t iz = 0; iz < s.nz; ++iz) {
                const Vec3& j = s.values[(ix * s.ny + iy) * s.nz + iz];
                if (j.isZero(0.0)) continue;
                const double d = (x - s.position(ix, iy, iz)).norm();
                if (d == 0.0) throw ProximityError("point coincides with a current sample");
                a += j * (f(t - d / PC::c) * dv / d);
            }
    return {PC::mu0 / (4.0 * kPi) * a, "point_sum", 0.0};
}

}  // namespace photon_ledger
