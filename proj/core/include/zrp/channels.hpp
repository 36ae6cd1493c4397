#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace zrp::channels {

using Complex = std::complex<double>;

enum class Sign { plus, minus };

/// Multichannel zero-range-potential parameters of a homonuclear diatomic.
///
/// Centre 1 carries A1 = diag(alpha) + A, centre 2 carries
/// A2 = sigma A1 sigma with sigma = diag(eta_0 eta_n). Only the parity
/// products eta_0 eta_n are stored; the individual parities never enter an
/// observable.
class ChannelModel {
 public:
  /// `coupling` must be real symmetric with an exactly zero diagonal,
  /// parity_products[0] = +1 and thresholds[0] = 0 (hartree).
  ChannelModel(std::vector<double> alphas, Eigen::MatrixXd coupling,
               std::vector<int> parity_products, std::vector<double> thresholds);

  /// Builds the model from the scattering-length matrix S = A1^{-1} (bohr).
  /// Throws ArgumentError when S is not symmetric to 1e-12 and
  /// SingularMatrixError when |det S| <= 1e-12 ||S||^{N+1}.
  static ChannelModel from_scattering_length_matrix(const Eigen::MatrixXd& S,
                                                    std::vector<int> parity_products,
                                                    std::vector<double> thresholds);

  int size() const noexcept { return static_cast<int>(alphas_.size()); }
  double alpha(int n) const { return alphas_.at(n); }
  double coupling(int n, int m) const { return coupling_(n, m); }
  int parity_product(int n) const { return parity_.at(n); }
  double threshold(int n) const { return thresholds_.at(n); }

  const std::vector<double>& alphas() const noexcept { return alphas_; }
  const Eigen::MatrixXd& coupling_matrix() const noexcept { return coupling_; }
  const std::vector<int>& parity_products() const noexcept { return parity_; }
  const std::vector<double>& thresholds() const noexcept { return thresholds_; }

  /// diag(alpha) + A.
  Eigen::MatrixXd a1() const;
  /// sigma A1 sigma.
  Eigen::MatrixXd a2() const;

 private:
  std::vector<double> alphas_;
  Eigen::MatrixXd coupling_;
  std::vector<int> parity_;
  std::vector<double> thresholds_;
};

/// Incident energy and per-channel momenta. Open channels have real k >= 0,
/// closed channels k = i|k|.
struct Kinematics {
  double e_in = 0.0;
  std::vector<Complex> k;

  double k0() const { return k.at(0).real(); }
  bool is_open(int n) const { return k.at(n).imag() == 0.0; }
  int open_count() const;
  /// Copy with channel n's momentum replaced by the real value `k_n`.
  Kinematics with_momentum(int n, double k_n) const;
};

/// k_n = sqrt(2 (e_in - threshold_n)), imaginary below threshold.
/// Throws ArgumentError unless e_in > 0.
Kinematics kinematics(const ChannelModel& model, double e_in);

/// theta_n^(+-) = alpha_n + i k_n +- eta_0 eta_n exp(2 i k_n R) / (2R).
Complex theta(const ChannelModel& model, const Kinematics& kin, int n, Sign sign, double R);

/// Omega^(+-) = first column of (Lambda^(+-))^{-1},
/// Lambda^(+-) = diag(theta^(+-)) + A.
///
/// Throws SingularMatrixError when the reciprocal condition estimate of
/// Lambda drops below 1e-12.
std::vector<Complex> omega(const ChannelModel& model, const Kinematics& kin, Sign sign,
                           double R);

struct AmplitudeFactors {
  double R = 0.0;
  std::vector<Complex> theta_plus;
  std::vector<Complex> theta_minus;
  std::vector<Complex> omega_plus;
  std::vector<Complex> omega_minus;
};

AmplitudeFactors amplitude_factors(const ChannelModel& model, const Kinematics& kin, double R);

/// Lambda^(+-) as a dense matrix.
Eigen::MatrixXcd lambda_matrix(const ChannelModel& model, const Kinematics& kin, Sign sign,
                               double R);

}  // namespace zrp::channels
