#pragma once

#include <cstddef>

#include "photon_ledger/coherent_state.hpp"

namespace photon_ledger {

struct FieldSample {
    Vec3 x = Vec3::Zero();
    double t = 0.0;
    Vec3 A = Vec3::Zero();       // V s / m
    Vec3 B = Vec3::Zero();       // T
    Vec3 E_perp = Vec3::Zero();  // V / m
    /// max over fields and components of |Im| / |value| for the hermitian
    /// part of the mode integral; zero in exact arithmetic on a k -> -k
    /// symmetric grid.
    double imaginary_residue = 0.0;
};

struct FieldOptions {
    /// Meridian fast path (n_phi = 1 grids, axisymmetric amplitudes): 0 does
    /// the azimuthal integral exactly through J0 and J1, n > 0 uses an n-point
    /// trapezoid rule instead.
    std::size_t azimuthal_nodes = 0;
};

/// Smallest polar node count accepted for evaluation at x: k_max |x| <= n_theta / 2.
std::size_t required_polar_nodes(const KGrid& grid, const Vec3& x);

/// Throws ResolutionError naming the required n_theta when x is outside the
/// range the polar grid resolves.
void check_resolution(const KGrid& grid, const Vec3& x);

/// Expectation values of A, B and E_perp in the coherent state at (x, t):
///   A = sqrt(hbar mu0 c / (2pi)^3) int d^3k (2k)^(-1/2) [xi e^{i(k.x - ckt)} + c.c.]
///   B = same with the kernel i k x (...) and a relative minus sign on c.c.
///   E = i sqrt(hbar mu0 c^3 / (2pi)^3) int d^3k sqrt(k/2) [xi e^{...} - c.c.]
/// Stationary amplitudes may be evaluated at any t; time-dependent ones only
/// at their own timestamp.
FieldSample reconstruct_fields(const PhotonAmplitude& xi, const Vec3& x, double t, const FieldOptions& options = {});

/// Coulomb-gauge magnetostatic potential straight from the spectral current,
/// A(x) = (2pi)^(-3/2) int d^3k mu0 j_perp(k) / k^2 e^{i k.x}.
Vec3 static_potential_identity(const CurrentSource& source, const Vec3& x, const KGrid& grid,
                               const FieldOptions& options = {});

}  // namespace photon_ledger
