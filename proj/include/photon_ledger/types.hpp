#pragma once

#include <complex>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace photon_ledger {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

inline CVec3 to_complex(const Vec3& v) { return v.cast<cplx>(); }

// Real dot product k·j for a complex vector j (no conjugation).
inline cplx dot_real(const Vec3& k, const CVec3& j) {
    return k.x() * j.x() + k.y() * j.y() + k.z() * j.z();
}

inline CVec3 cross_real(const Vec3& k, const CVec3& j) {
    return CVec3(k.y() * j.z() - k.z() * j.y(),
                 k.z() * j.x() - k.x() * j.z(),
                 k.x() * j.y() - k.y() * j.x());
}

inline double norm(const CVec3& v) { return v.norm(); }

}  // namespace photon_ledger
