#include "zrp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "zrp/errors.hpp"
#include "zrp/numerics.hpp"
#include "zrp/units.hpp"

namespace zrp::oracle {

namespace {

using amplitude::Vec3;
constexpr double kPi = units::kPi;

void require_open(const channels::Kinematics& kin, int n) {
  if (n < 0 || n >= static_cast<int>(kin.k.size())) {
    throw ArgumentError("oracle: channel " + std::to_string(n) + " out of range");
  }
  if (!kin.is_open(n)) {
    throw ClosedChannelError("channel " + std::to_string(n) + " closed", n, kin.e_in);
  }
}

Vec3 outgoing_direction(double angle, double azimuth) {
  return {std::sin(angle) * std::cos(azimuth), std::sin(angle) * std::sin(azimuth),
          std::cos(angle)};
}

// Orientation rule over the unit sphere; weights sum to 4 pi.
struct SphereRule {
  std::vector<Vec3> directions;
  std::vector<double> weights;
};

SphereRule sphere_rule(int order) {
  if (order < 8) throw ArgumentError("oracle: grid_order must be >= 8");
  const auto polar = numerics::gauss_rule(order, -1.0, 1.0);
  const int n_phi = 2 * order;
  SphereRule rule;
  rule.directions.reserve(polar.size() * n_phi);
  rule.weights.reserve(polar.size() * n_phi);
  for (std::size_t a = 0; a < polar.size(); ++a) {
    const double c = polar.nodes[a];
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    for (int b = 0; b < n_phi; ++b) {
      const double phi = 2.0 * kPi * b / n_phi;
      rule.directions.emplace_back(s * std::cos(phi), s * std::sin(phi), c);
      rule.weights.push_back(polar.weights[a] * 2.0 * kPi / n_phi);
    }
  }
  return rule;
}

double plain_sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

}  // namespace

CentreCoefficients direct_bc_coefficients(const channels::ChannelModel& model,
                                          const channels::Kinematics& kin,
                                          const amplitude::Geometry& geom) {
  amplitude::validate(geom);
  const int size = model.size();
  if (static_cast<int>(kin.k.size()) != size) {
    throw ArgumentError("direct_bc: kinematics and model sizes differ");
  }
  const Complex i(0.0, 1.0);
  const double R = geom.R;
  const Eigen::MatrixXd a1 = model.a1();
  const Eigen::MatrixXd a2 = model.a2();

  Eigen::MatrixXcd system = Eigen::MatrixXcd::Zero(2 * size, 2 * size);
  for (int n = 0; n < size; ++n) {
    for (int m = 0; m < size; ++m) {
      system(n, m) = a1(n, m);
      system(size + n, size + m) = a2(n, m);
    }
    const Complex kn = kin.k[n];
    system(n, n) += i * kn;
    system(size + n, size + n) += i * kn;
    // The outgoing wave of the other centre, evaluated at this one.
    const Complex cross = std::exp(2.0 * i * kn * R) / (2.0 * R);
    system(n, size + n) = cross;
    system(size + n, n) = cross;
  }

  // Incident plane wave at R_1 = -R and R_2 = +R.
  const Vec3 k0 = kin.k0() * geom.k0_hat;
  const double phase = k0.dot(R * geom.r_hat);
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(2 * size);
  rhs(0) = -std::exp(-i * phase);
  rhs(size) = -std::exp(i * phase);

  const Eigen::FullPivLU<Eigen::MatrixXcd> lu(system);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-14)) {
    throw SingularMatrixError("direct_bc: boundary-condition system is singular", rcond);
  }
  const Eigen::VectorXcd c = lu.solve(rhs);
  return {c.head(size), c.tail(size)};
}

Complex direct_bc_amplitude(const channels::ChannelModel& model, const channels::Kinematics& kin,
                            int n, const amplitude::Geometry& geom) {
  require_open(kin, n);
  const auto coef = direct_bc_coefficients(model, kin, geom);
  const Complex i(0.0, 1.0);
  const double kr = kin.k[n].real() * geom.k_hat.dot(geom.R * geom.r_hat);
  return coef.c1(n) * std::exp(i * kr) + coef.c2(n) * std::exp(-i * kr);
}

double angular_average_dcs(const channels::ChannelModel& model, const molecule::MorseState& morse0,
                           int v, double e_in, int n, double angle, int grid_order,
                           const xsection::Options& opts, double azimuth) {
  const auto kin = channels::kinematics(model, e_in);
  require_open(kin, n);
  const auto sphere = sphere_rule(grid_order);
  const double k = kin.k[n].real();
  const double k0 = kin.k0();
  const Vec3 k_vec = k * outgoing_direction(angle, azimuth);
  const Vec3 k0_vec(0.0, 0.0, k0);
  const int eta = model.parity_product(n);

  const molecule::VibHarmonic x0(morse0, v);
  const auto grid = molecule::reference_grid(morse0, v, opts.radial_nodes);
  double total = 0.0;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    const double R = grid.nodes[r];
    const auto factors = channels::amplitude_factors(model, kin, R);
    double orient = 0.0;
    for (std::size_t d = 0; d < sphere.directions.size(); ++d) {
      const Complex f =
          amplitude::f_from_factors(factors, eta, n, k_vec, k0_vec, R * sphere.directions[d]);
      orient += sphere.weights[d] * std::norm(f);
    }
    const double x = x0(R);
    total += grid.weights[r] * x * x * orient / (4.0 * kPi);
  }
  return k / k0 * total;
}

double angular_average_dcs_vib(const channels::ChannelModel& model,
                               const molecule::MorseState& morse0,
                               const molecule::MorseState& morse_n, int v, int v_prime,
                               double e_in, int n, double angle, int grid_order,
                               const xsection::Options& opts, double azimuth) {
  auto kin = channels::kinematics(model, e_in);
  const auto k_out = xsection::vibronic_momentum(morse0, morse_n, v, v_prime, e_in);
  if (!k_out) throw ClosedChannelError("channel " + std::to_string(n) + " closed", n, e_in);
  if (n != 0) kin = kin.with_momentum(n, *k_out);
  const auto sphere = sphere_rule(grid_order);
  const double k = *k_out;
  const double k0 = kin.k0();
  const Vec3 k_vec = k * outgoing_direction(angle, azimuth);
  const Vec3 k0_vec(0.0, 0.0, k0);
  const int eta = model.parity_product(n);

  const molecule::VibHarmonic x0(morse0, v);
  const molecule::VibHarmonic xn(morse_n, v_prime);
  const auto [lo0, hi0] = molecule::reference_interval(morse0, v);
  const auto [lon, hin] = molecule::reference_interval(morse_n, v_prime);
  const auto grid =
      numerics::gauss_rule(opts.radial_nodes, std::min(lo0, lon), std::max(hi0, hin));

  std::vector<channels::AmplitudeFactors> factors;
  std::vector<double> overlap;
  factors.reserve(grid.size());
  for (std::size_t r = 0; r < grid.size(); ++r) {
    const double R = grid.nodes[r];
    factors.push_back(channels::amplitude_factors(model, kin, R));
    overlap.push_back(grid.weights[r] * xn(R) * x0(R));
  }

  double total = 0.0;
  for (std::size_t d = 0; d < sphere.directions.size(); ++d) {
    Complex matrix_element = 0.0;
    for (std::size_t r = 0; r < grid.size(); ++r) {
      matrix_element += overlap[r] * amplitude::f_from_factors(factors[r], eta, n, k_vec, k0_vec,
                                                               grid.nodes[r] * sphere.directions[d]);
    }
    total += sphere.weights[d] * std::norm(matrix_element);
  }
  return k / k0 * total / (4.0 * kPi);
}

double elastic_reference(double alpha, double k0, double R, double angle) {
  const Complex i(0.0, 1.0);
  const Complex wave = std::exp(2.0 * i * k0 * R) / (2.0 * R);
  const Complex om_p = 1.0 / (alpha + i * k0 + wave);
  const Complex om_m = 1.0 / (alpha + i * k0 - wave);
  const double s = plain_sinc(2.0 * k0 * R);
  const double q_diff = 2.0 * k0 * std::abs(std::sin(0.5 * angle));
  const double q_sum = 2.0 * k0 * std::abs(std::cos(0.5 * angle));
  const double h_diff = plain_sinc(2.0 * q_diff * R) / 2.0;
  const double h_sum = plain_sinc(2.0 * q_sum * R) / 2.0;
  const double a_p = 1.0 + 2.0 * s + h_diff + h_sum;
  const double a_m = 1.0 - 2.0 * s + h_diff + h_sum;
  const double a_x = h_diff - h_sum;
  return std::norm(om_p) * a_p + std::norm(om_m) * a_m + 2.0 * std::real(om_p * std::conj(om_m)) * a_x;
}

double elastic_reference_ics(double alpha, double k0, double R) {
  const Complex i(0.0, 1.0);
  const Complex wave = std::exp(2.0 * i * k0 * R) / (2.0 * R);
  const Complex om_p = 1.0 / (alpha + i * k0 + wave);
  const Complex om_m = 1.0 / (alpha + i * k0 - wave);
  const double s = plain_sinc(2.0 * k0 * R);
  return 4.0 * kPi * (std::norm(om_p) * (1.0 + s) * (1.0 + s) + std::norm(om_m) * (1.0 - s) * (1.0 - s));
}

}  // namespace zrp::oracle
