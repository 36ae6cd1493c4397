#pragma once

namespace zrp::units {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// eV per hartree.
inline constexpr double kHartreeEv = 27.2114;

/// 1 bohr^2 expressed in units of 1e-16 cm^2.
inline constexpr double kBohr2In1e16Cm2 = 0.280028;

constexpr double ev_to_hartree(double ev) { return ev / kHartreeEv; }
constexpr double hartree_to_ev(double h) { return h * kHartreeEv; }

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace zrp::units
