#pragma once

#include <Eigen/Dense>

#include "zrp/amplitude.hpp"
#include "zrp/channels.hpp"
#include "zrp/molecule.hpp"
#include "zrp/xsection.hpp"

// Brute-force reference computations. Each follows a route independent of the
// closed forms in amplitude/xsection, so that agreement between the two
// validates the algebra connecting them.
namespace zrp::oracle {

using channels::Complex;

/// Singular-coefficient vectors at the two centres (centre 1 at -R, centre 2 at +R).
struct CentreCoefficients {
  Eigen::VectorXcd c1;
  Eigen::VectorXcd c2;
};

/// Solves the 2(N+1) boundary-condition system
///
///   B_{j,n} + i k_n (C_j)_n = -sum_m (A_j)_{nm} (C_j)_m,
///   B_{j,n} = delta_{n0} exp(i k0 . R_j) + (C_j')_n exp(2 i k_n R) / (2R),
///
/// with A_1 = diag(alpha) + A and A_2 = sigma A_1 sigma, directly.
CentreCoefficients direct_bc_coefficients(const channels::ChannelModel& model,
                                          const channels::Kinematics& kin,
                                          const amplitude::Geometry& geom);

/// f_n = (C_1)_n exp(i k . R) + (C_2)_n exp(-i k . R) from the direct solve.
Complex direct_bc_amplitude(const channels::ChannelModel& model, const channels::Kinematics& kin,
                            int n, const amplitude::Geometry& geom);

/// Pure electronic DCS by literal orientation quadrature:
/// (1/4pi)(k_n/k0) int dR |X_0v|^2 int dR_hat |f_n|^2.
/// Gauss-Legendre in cos(theta_R) of order `grid_order` times a
/// 2*grid_order-point trapezoid in phi_R. `azimuth` rotates the outgoing
/// direction about the incident axis.
double angular_average_dcs(const channels::ChannelModel& model, const molecule::MorseState& morse0,
                           int v, double e_in, int n, double angle, int grid_order,
                           const xsection::Options& opts = {}, double azimuth = 0.0);

/// Electron-vibrational DCS by literal orientation quadrature:
/// (1/4pi)(k_n/k0) int dR_hat |int X_nv' f_n X_0v dR|^2.
double angular_average_dcs_vib(const channels::ChannelModel& model,
                               const molecule::MorseState& morse0,
                               const molecule::MorseState& morse_n, int v, int v_prime,
                               double e_in, int n, double angle, int grid_order,
                               const xsection::Options& opts = {}, double azimuth = 0.0);

/// Single-channel two-centre DCS at fixed R (bohr^2/sr), hand-inlined:
/// Omega^(+-) = 1/(alpha + ik +- exp(2ikR)/2R), elastic kinematics.
double elastic_reference(double alpha, double k0, double R, double angle);

/// Single-channel two-centre ICS at fixed R (bohr^2).
double elastic_reference_ics(double alpha, double k0, double R);

}  // namespace zrp::oracle
