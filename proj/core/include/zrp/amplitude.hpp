#pragma once

#include <optional>

#include <Eigen/Dense>

#include "zrp/channels.hpp"

namespace zrp::amplitude {

using channels::Complex;
using Vec3 = Eigen::Vector3d;

/// Scattering geometry in the LAB frame. R is half the internuclear distance;
/// the two centres sit at -R r_hat and +R r_hat.
struct Geometry {
  Vec3 k_hat;   // outgoing direction
  Vec3 k0_hat;  // incident direction
  Vec3 r_hat;   // molecular axis
  double R = 0.0;
};

/// Throws ArgumentError unless all directions are unit vectors to 1e-12 and R > 0.
void validate(const Geometry& geom);

/// Fixed-nuclei amplitude from precomputed Omega factors. `k`, `k0` and
/// `r_vec` are full vectors (momenta in bohr^-1, r_vec in bohr).
///
///   eta = +1:  f = -2 Om+ cos(k.R) cos(k0.R) - 2 Om- sin(k.R) sin(k0.R)
///   eta = -1:  f = 2i Om- cos(k.R) sin(k0.R) - 2i Om+ sin(k.R) cos(k0.R)
Complex f_from_factors(const channels::AmplitudeFactors& factors, int parity_product, int n,
                       const Vec3& k, const Vec3& k0, const Vec3& r_vec);

/// f_n(k, k0, R) for an open channel n (k_n real, >= 0).
/// Throws ClosedChannelError for closed channels.
Complex f_fixed_nuclei(const channels::ChannelModel& model, const channels::Kinematics& kin,
                       int n, const Geometry& geom);

/// ceil(|k + k0| R) + 20.
int default_l_max(double k_plus_k0, double R);

/// The same amplitude summed as a partial-wave series in Legendre
/// polynomials of r_hat . unit(k +- k0). Only l of the parity selected by
/// eta_0 eta_n contribute. Throws ConvergenceError if the last three retained
/// terms all exceed 1e-12 of the running sum.
Complex f_partial_wave(const channels::ChannelModel& model, const channels::Kinematics& kin,
                       int n, const Geometry& geom, std::optional<int> l_max = std::nullopt);

}  // namespace zrp::amplitude
