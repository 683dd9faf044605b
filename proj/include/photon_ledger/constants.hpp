#pragma once

namespace photon_ledger {

/// CODATA-2018 values in SI units. eps0 is derived from mu0 and c.
struct PhysicalConstants {
    static constexpr double hbar = 1.054571817e-34;   // J s
    static constexpr double c = 2.99792458e8;         // m/s
    static constexpr double mu0 = 1.25663706212e-6;   // N/A^2
    static constexpr double eps0 = 1.0 / (mu0 * c * c);  // F/m
};

inline constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace photon_ledger
