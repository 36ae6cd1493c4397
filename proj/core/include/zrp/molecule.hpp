#pragma once

#include <utility>

#include "zrp/numerics.hpp"

namespace zrp::molecule {

/// Half the proton mass in electron masses: reduced mass of H2.
inline constexpr double kH2ReducedMass = 918.0764;

/// Default Gauss node count for radial integrals.
inline constexpr int kDefaultRadialNodes = 256;

/// Morse electronic term in the half-internuclear-distance variable R.
///
///   U(R) = omega^2 / (4 anharm) [1 - exp(-2 sqrt(2 mu anharm) (R - r_eq))]^2 + u_offset
///
/// with the vibrational ladder E_v = omega (v + 1/2) - anharm (v + 1/2)^2 + u_offset.
/// Energies in hartree, lengths in bohr, mu in electron masses.
class MorseState {
 public:
  /// Throws ModelError unless omega > 0, anharm > 0, omega/anharm > 1,
  /// r_eq > 0 and mu > 0.
  MorseState(double omega, double anharm, double r_eq, double u_offset,
             double mu = kH2ReducedMass);

  /// State whose ground vibrational level sits at energy zero
  /// (u_offset = -omega/2 + anharm/4).
  static MorseState ground(double omega, double anharm, double r_eq,
                           double mu = kH2ReducedMass);

  /// State whose v = 0 level sits at `level0` hartree.
  static MorseState with_ground_level(double omega, double anharm, double r_eq,
                                      double level0, double mu = kH2ReducedMass);

  double omega() const noexcept { return omega_; }
  double anharm() const noexcept { return anharm_; }
  double r_eq() const noexcept { return r_eq_; }
  double u_offset() const noexcept { return u_offset_; }
  double mu() const noexcept { return mu_; }

  /// Exponent 2 sqrt(2 mu anharm) of the Morse curve (bohr^-1).
  double range_parameter() const noexcept;
  /// Well depth omega^2 / (4 anharm).
  double depth() const noexcept;

 private:
  double omega_;
  double anharm_;
  double r_eq_;
  double u_offset_;
  double mu_;
};

double morse_potential(const MorseState& s, double R);

/// Largest v with xi = omega/anharm - 2v - 1 > 0.
int v_max(const MorseState& s);

/// xi = omega/anharm - 2v - 1 (no range check).
double xi(const MorseState& s, int v);

/// E_v = omega (v + 1/2) - anharm (v + 1/2)^2 + u_offset.
/// Throws ArgumentError for v outside [0, v_max].
double energy_level(const MorseState& s, int v);

/// Interval [R_lo, R_hi] outside of which every X_v with v <= v_hi carries
/// less than 1e-12 of its norm. R_lo is never below 1e-3 bohr.
std::pair<double, double> reference_interval(const MorseState& s, int v_hi);

/// Gauss rule on reference_interval(s, v_hi).
numerics::QuadratureRule reference_grid(const MorseState& s, int v_hi,
                                        int nodes = kDefaultRadialNodes);

/// Normalised vibrational eigenfunction
///
///   X_v(R) = C^{-1/2} z^{xi/2} exp(-z/2) L_v^xi(z),
///   z = (omega/anharm) exp(-2 sqrt(2 mu anharm) (R - r_eq)),
///
/// with the closed-form C = Gamma(xi + v + 1) / (v! xi sqrt(8 mu anharm))
/// followed by a numerical renormalisation on the reference grid, so the
/// discrete norm is one to rounding.
class VibHarmonic {
 public:
  VibHarmonic(const MorseState& state, int v);

  double operator()(double R) const;

  const MorseState& state() const noexcept { return state_; }
  int v() const noexcept { return v_; }
  double xi() const noexcept { return xi_; }
  /// Effective C^{-1/2}, including the numerical renormalisation.
  double norm() const noexcept;
  /// Closed-form C^{-1/2} before renormalisation.
  double analytic_norm() const noexcept;

 private:
  double log_value(double R, double& laguerre_sign) const;

  MorseState state_;
  int v_;
  double xi_;
  double log_ratio_;        // ln(omega/anharm)
  double range_;            // 2 sqrt(2 mu anharm)
  double log_analytic_norm_;
  double log_renorm_ = 0.0;
};

/// One-shot evaluation of X_v(R). Builds a VibHarmonic each call; prefer the
/// class for repeated evaluation.
double vib_harmonic(const MorseState& s, int v, double R);

}  // namespace zrp::molecule
