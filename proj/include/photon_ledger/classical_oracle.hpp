#pragma once

#include <string>

#include "photon_ledger/current_model.hpp"

namespace photon_ledger {

/// Independent classical reference values. Nothing here touches the k-space
/// machinery.
struct OracleResult {
    Vec3 value = Vec3::Zero();
    std::string method;  // closed_form, line_quadrature, point_sum, retarded_quadrature
    double estimated_error = 0.0;
};

/// On-axis field of a thin loop, mu0 I R^2 / (2 (R^2 + z^2)^(3/2)), T.
double loop_axis_field(double current, double radius, double z);

/// Magnetostatic B of the source at x (profile ignored, f = 1).
///
/// Loops use the periodic trapezoid rule on the wire, doubling from 64 nodes
/// until successive values agree to rel_tol; the Gaussian core is ignored,
/// which is exact outside the core up to exponentially small tails. Points
/// closer than 1e-3 R to the wire raise ProximityError. Dipoles use the
/// closed form and sampled currents a point sum.
OracleResult biot_savart(const CurrentSource& source, const Vec3& x, double rel_tol = 1e-10);

/// Magnetostatic Coulomb-gauge vector potential, mu0/(4 pi) int j dV / r.
OracleResult static_vector_potential(const CurrentSource& source, const Vec3& x, double rel_tol = 1e-10);

/// Retarded vector potential (mu0 / 4 pi) int j(x', t - |x - x'|/c) / |x - x'| dV'.
/// Convergence is judged against max(rel_tol |A|, abs_floor).
OracleResult retarded_vector_potential(const CurrentSource& source, const Vec3& x, double t,
                                       double rel_tol = 1e-10, double abs_floor = 0.0);

}  // namespace photon_ledger
