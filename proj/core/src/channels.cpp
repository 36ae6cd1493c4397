#include "zrp/channels.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "zrp/errors.hpp"

namespace zrp::channels {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kSingularTol = 1e-12;

void check_index(const ChannelModel& model, int n, const char* fn) {
  if (n < 0 || n >= model.size()) {
    throw ArgumentError(std::string(fn) + ": channel " + std::to_string(n) + " out of range");
  }
}

}  // namespace

ChannelModel::ChannelModel(std::vector<double> alphas, Eigen::MatrixXd coupling,
                           std::vector<int> parity_products, std::vector<double> thresholds)
    : alphas_(std::move(alphas)),
      coupling_(std::move(coupling)),
      parity_(std::move(parity_products)),
      thresholds_(std::move(thresholds)) {
  const auto n = static_cast<Eigen::Index>(alphas_.size());
  if (n == 0) throw ArgumentError("ChannelModel: need at least one channel");
  if (coupling_.rows() != n || coupling_.cols() != n) {
    throw ArgumentError("ChannelModel: coupling matrix must be " + std::to_string(n) + "x" +
                        std::to_string(n));
  }
  if (static_cast<Eigen::Index>(parity_.size()) != n ||
      static_cast<Eigen::Index>(thresholds_.size()) != n) {
    throw ArgumentError("ChannelModel: parity_products and thresholds need one entry per channel");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (coupling_(i, i) != 0.0) throw ArgumentError("ChannelModel: coupling diagonal must be zero");
    for (Eigen::Index j = 0; j < i; ++j) {
      if (coupling_(i, j) != coupling_(j, i)) {
        throw ArgumentError("ChannelModel: coupling matrix must be symmetric");
      }
    }
  }
  for (int p : parity_) {
    if (p != 1 && p != -1) throw ArgumentError("ChannelModel: parity products must be +1 or -1");
  }
  if (parity_[0] != 1) throw ArgumentError("ChannelModel: parity_products[0] must be +1");
  if (thresholds_[0] != 0.0) throw ArgumentError("ChannelModel: thresholds[0] must be 0");
  for (double a : alphas_) {
    if (!std::isfinite(a)) throw ArgumentError("ChannelModel: alphas must be finite");
  }
}

ChannelModel ChannelModel::from_scattering_length_matrix(const Eigen::MatrixXd& S,
                                                         std::vector<int> parity_products,
                                                         std::vector<double> thresholds) {
  if (S.rows() == 0 || S.rows() != S.cols()) {
    throw ArgumentError("scattering-length matrix must be square and non-empty");
  }
  if ((S - S.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) {
    throw ArgumentError("scattering-length matrix is not symmetric");
  }
  const auto n = S.rows();
  const double norm = S.cwiseAbs().rowwise().sum().maxCoeff();
  const double det = S.fullPivLu().determinant();
  const double scale = std::pow(norm, static_cast<double>(n));
  if (!(std::abs(det) > kSingularTol * scale)) {
    throw SingularMatrixError("scattering-length matrix is singular", std::abs(det) / scale);
  }

  Eigen::MatrixXd inv;
  if (n == 2) {
    // Cofactor form keeps the c -> -c symmetry exact in floating point.
    const double d = S(0, 0) * S(1, 1) - S(0, 1) * S(1, 0);
    inv.resize(2, 2);
    inv << S(1, 1) / d, -S(0, 1) / d, -S(1, 0) / d, S(0, 0) / d;
  } else {
    inv = S.partialPivLu().inverse();
  }
  inv = 0.5 * (inv + inv.transpose()).eval();

  std::vector<double> alphas(static_cast<std::size_t>(n));
  Eigen::MatrixXd coupling = inv;
  for (Eigen::Index i = 0; i < n; ++i) {
    alphas[static_cast<std::size_t>(i)] = inv(i, i);
    coupling(i, i) = 0.0;
  }
  return ChannelModel(std::move(alphas), std::move(coupling), std::move(parity_products),
                      std::move(thresholds));
}

Eigen::MatrixXd ChannelModel::a1() const {
  Eigen::MatrixXd m = coupling_;
  for (int i = 0; i < size(); ++i) m(i, i) = alphas_[i];
  return m;
}

Eigen::MatrixXd ChannelModel::a2() const {
  Eigen::MatrixXd m = a1();
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) m(i, j) *= parity_[i] * parity_[j];
  }
  return m;
}

int Kinematics::open_count() const {
  int count = 0;
  for (const auto& kn : k) count += kn.imag() == 0.0 ? 1 : 0;
  return count;
}

Kinematics Kinematics::with_momentum(int n, double k_n) const {
  if (!(k_n >= 0.0)) throw ArgumentError("with_momentum: momentum must be >= 0");
  Kinematics out = *this;
  out.k.at(n) = Complex(k_n, 0.0);
  return out;
}

Kinematics kinematics(const ChannelModel& model, double e_in) {
  if (!(e_in > 0.0)) throw ArgumentError("kinematics: incident energy must be > 0");
  Kinematics kin;
  kin.e_in = e_in;
  kin.k.reserve(model.size());
  for (double th : model.thresholds()) {
    const double excess = e_in - th;
    if (excess >= 0.0) {
      kin.k.emplace_back(std::sqrt(2.0 * excess), 0.0);
    } else {
      kin.k.emplace_back(0.0, std::sqrt(-2.0 * excess));
    }
  }
  return kin;
}

Complex theta(const ChannelModel& model, const Kinematics& kin, int n, Sign sign, double R) {
  check_index(model, n, "theta");
  if (!(R > 0.0)) throw ArgumentError("theta: R must be > 0");
  const Complex i(0.0, 1.0);
  const Complex kn = kin.k.at(n);
  const Complex wave = std::exp(2.0 * i * kn * R) / (2.0 * R);
  const double s = (sign == Sign::plus ? 1.0 : -1.0) * model.parity_product(n);
  return model.alpha(n) + i * kn + s * wave;
}

Eigen::MatrixXcd lambda_matrix(const ChannelModel& model, const Kinematics& kin, Sign sign,
                               double R) {
  if (static_cast<int>(kin.k.size()) != model.size()) {
    throw ArgumentError("lambda_matrix: kinematics and model sizes differ");
  }
  Eigen::MatrixXcd lambda = model.coupling_matrix().cast<Complex>();
  for (int n = 0; n < model.size(); ++n) lambda(n, n) = theta(model, kin, n, sign, R);
  return lambda;
}

std::vector<Complex> omega(const ChannelModel& model, const Kinematics& kin, Sign sign,
                           double R) {
  const Eigen::MatrixXcd lambda = lambda_matrix(model, kin, sign, R);
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(lambda);
  const double rcond = lu.rcond();
  if (!(rcond >= kSingularTol)) {
    throw SingularMatrixError("Lambda" + std::string(sign == Sign::plus ? "(+)" : "(-)") +
                                  " is near-singular at R = " + std::to_string(R) +
                                  " (rcond = " + std::to_string(rcond) +
                                  "); parameters sit on a resonance",
                              rcond);
  }
  Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(model.size());
  e0(0) = 1.0;
  const Eigen::VectorXcd x = lu.solve(e0);
  return {x.data(), x.data() + x.size()};
}

AmplitudeFactors amplitude_factors(const ChannelModel& model, const Kinematics& kin, double R) {
  AmplitudeFactors f;
  f.R = R;
  f.theta_plus.resize(model.size());
  f.theta_minus.resize(model.size());
  for (int n = 0; n < model.size(); ++n) {
    f.theta_plus[n] = theta(model, kin, n, Sign::plus, R);
    f.theta_minus[n] = theta(model, kin, n, Sign::minus, R);
  }
  f.omega_plus = omega(model, kin, Sign::plus, R);
  f.omega_minus = omega(model, kin, Sign::minus, R);
  return f;
}

}  // namespace zrp::channels
