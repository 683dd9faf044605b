#include "photon_ledger/field_reconstruction.hpp"

#include <cmath>
#include <cstdio>

#include "photon_ledger/errors.hpp"
#include "photon_ledger/special_functions.hpp"

namespace photon_ledger {

namespace {

using PC = PhysicalConstants;


// Sums fn(node) e^{i k.x} over the grid. fn returns M complex 3-vectors
// stacked in one column. On the meridian fast path fn is evaluated at phi = 0
// and the azimuthal sum applies the rotation R_z(phi) to each vector. With
// n_az = 0 the azimuthal integrals are done exactly,
//   int dphi e^{i g cos(phi - phi_x)} {1, cos phi, sin phi}
//     = 2 pi {J0(g), i J1(g) cos phi_x, i J1(g) sin phi_x},
// otherwise by an n_az point trapezoid rule.
template <int M, class NodeFn>
Eigen::Matrix<cplx, 3 * M, 1> mode_sum(const KGrid& grid, bool meridian, const Vec3& x, std::size_t n_az,
                                       NodeFn&& fn) {
    using Col = Eigen::Matrix<cplx, 3 * M, 1>;
    if (!meridian) {
        return deterministic_sum<Col>(grid.size(), [&](std::size_t i) {
            const KNode node = grid.node(i);
            const Vec3 kv = node.wavevector();
            const Col v = fn(node);
            if (!v.allFinite()) detail::throw_non_finite(grid, i);
            return Col(node.weight * std::polar(1.0, kv.dot(x)) * v);
        });
    }
    const double rho = std::hypot(x.x(), x.y());
    const double cx = rho > 0.0 ? x.x() / rho : 1.0;
    const double sx = rho > 0.0 ? x.y() / rho : 0.0;
    std::vector<double> cphi(n_az), sphi(n_az);
    for (std::size_t l = 0; l < n_az; ++l) {
        const double p = 2.0 * kPi * static_cast<double>(l) / static_cast<double>(n_az);
        cphi[l] = std::cos(p);
        sphi[l] = std::sin(p);
    }
    const std::size_t count = grid.n_k() * grid.n_theta();
    return deterministic_sum<Col>(count, [&](std::size_t m) {
        const KNode node = grid.node(m);  // n_phi == 1, so index m is (i_k, i_theta)
        const Col v = fn(node);
        if (!v.allFinite()) detail::throw_non_finite(grid, m);
        const double kperp = node.k * node.sin_theta;
        const double kz = node.k * node.cos_theta;
        cplx s0 = 0.0, sc = 0.0, ss = 0.0;
        // node.weight already carries the 2 pi of the azimuthal integral
        double scale = 1.0;
        if (n_az == 0) {
            const double g = kperp * rho;
            const double j1 = bessel_j1(g);
            s0 = bessel_j0(g);
            sc = cplx(0.0, j1 * cx);
            ss = cplx(0.0, j1 * sx);
        } else {
            for (std::size_t l = 0; l < n_az; ++l) {
                const cplx e = std::polar(1.0, kperp * (x.x() * cphi[l] + x.y() * sphi[l]));
                s0 += e;
                sc += cphi[l] * e;
                ss += sphi[l] * e;
            }
            scale = 1.0 / static_cast<double>(n_az);
        }
        const cplx ez = std::polar(scale * node.weight, kz * x.z());
        s0 *= ez;
        sc *= ez;
        ss *= ez;
        Col out;
        for (int f = 0; f < M; ++f) {
            const cplx vx = v[3 * f], vy = v[3 * f + 1], vz = v[3 * f + 2];
            out[3 * f] = vx * sc - vy * ss;
            out[3 * f + 1] = vx * ss + vy * sc;
            out[3 * f + 2] = vz * s0;
        }
        return out;
    });
}

Vec3 real_part(const CVec3& v) { return v.real(); }

double residue_of(const CVec3& hermitian_sum, const Vec3& value) {
    const double scale = 0.5 * value.norm();
    if (!(scale > 0.0)) return 0.0;
    return hermitian_sum.imag().cwiseAbs().maxCoeff() / scale;
}

}  // namespace

std::size_t required_polar_nodes(const KGrid& grid, const Vec3& x) {
    return static_cast<std::size_t>(std::ceil(2.0 * grid.spec().k_max * x.norm()));
}

void check_resolution(const KGrid& grid, const Vec3& x) {
    const std::size_t need = required_polar_nodes(grid, x);
    if (grid.n_theta() < need) {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "under-resolved oscillation at |x| = %.6g m: k_max |x| = %.6g needs n_theta >= %zu (have %zu)",
                      x.norm(), grid.spec().k_max * x.norm(), need, grid.n_theta());
        throw ResolutionError(buf);
    }
}

FieldSample reconstruct_fields(const PhotonAmplitude& amp, const Vec3& x, double t, const FieldOptions& options) {
    const KGrid& grid = *amp.grid;
    check_resolution(grid, x);
    if (!amp.stationary && t != amp.time)
        throw ValidationError({"reconstruct_fields: time-dependent amplitude must be evaluated at its own time"});
    const bool meridian = grid.is_meridian();
    if (meridian && !amp.axisymmetric)
        throw ValidationError({"reconstruct_fields: meridian grid requires an axisymmetric amplitude"});

    const double pref_a = std::sqrt(PC::hbar * PC::mu0 * PC::c / std::pow(2.0 * kPi, 3));
    const double pref_e = std::sqrt(PC::hbar * PC::mu0 * PC::c * PC::c * PC::c / std::pow(2.0 * kPi, 3));
    const cplx i(0.0, 1.0);

    // Six vectors per node: A, B, E kernels and their hermitian parts.
    const auto sums = mode_sum<6>(grid, meridian, x, options.azimuthal_nodes,
                                  [&](const KNode& node) {
                                      const double k = node.k;
                                      // xi(k, t) e^{-ickt}: only the amplitude's own rotation enters, so
                                      // stationary states are t-independent to rounding.
                                      const cplx rot = std::polar(1.0, -mode_phase(k, amp.time));
                                      const CVec3 X = rot * amp.xi[node.index];
                                      const cplx u = rot * amp.temporal[node.i_k];
                                      const double pa = pref_a / std::sqrt(2.0 * k);
                                      const double pe = pref_e * std::sqrt(0.5 * k);
                                      const CVec3 ta = pa * X;
                                      const CVec3 tb = pa * i * cross_real(node.wavevector(), X);
                                      const CVec3 te = pe * i * X;
                                      const cplx ha = u == 0.0 ? cplx(0.0) : u.real() / u;
                                      const cplx iu = i * u;
                                      const cplx he = iu == 0.0 ? cplx(0.0) : iu.real() / iu;
                                      Eigen::Matrix<cplx, 18, 1> col;
                                      col << ta, tb, te, ha * ta, ha * tb, he * te;
                                      return col;
                                  });

    FieldSample s;
    s.x = x;
    s.t = t;
    s.A = 2.0 * real_part(sums.segment<3>(0));
    s.B = 2.0 * real_part(sums.segment<3>(3));
    s.E_perp = 2.0 * real_part(sums.segment<3>(6));
    s.imaginary_residue = std::max(residue_of(sums.segment<3>(9), s.A), residue_of(sums.segment<3>(12), s.B));
    if (!amp.stationary) s.imaginary_residue = std::max(s.imaginary_residue, residue_of(sums.segment<3>(15), s.E_perp));
    return s;
}

Vec3 static_potential_identity(const CurrentSource& source, const Vec3& x, const KGrid& grid,
                               const FieldOptions& options) {
    source.validate();
    if (!is_static(source.profile)) throw ValidationError({"static_potential_identity: source must be static"});
    check_resolution(grid, x);
    const bool meridian = grid.is_meridian();
    if (meridian && !source.axisymmetric_about_z())
        throw ValidationError({"static_potential_identity: meridian grid requires an axisymmetric source"});
    const SpectralCurrent j = spectral_transform(source).projected();
    const double pref = PC::mu0 * std::pow(2.0 * kPi, -1.5);
    const auto sum = mode_sum<1>(grid, meridian, x, options.azimuthal_nodes,
                                 [&](const KNode& node) -> CVec3 {
                                     return (pref / (node.k * node.k)) * j(node.wavevector());
                                 });
    return real_part(sum);
}

}  // namespace photon_ledger
