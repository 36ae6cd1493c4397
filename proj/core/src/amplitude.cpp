#include "zrp/amplitude.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "zrp/errors.hpp"
#include "zrp/numerics.hpp"

namespace zrp::amplitude {

namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kTailTol = 1e-12;
constexpr double kZeroMomentum = 1e-300;

void require_open(const channels::Kinematics& kin, int n) {
  if (n < 0 || n >= static_cast<int>(kin.k.size())) {
    throw ArgumentError("amplitude: channel " + std::to_string(n) + " out of range");
  }
  if (!kin.is_open(n)) {
    throw ClosedChannelError("channel " + std::to_string(n) + " closed at E=" +
                                 std::to_string(kin.e_in) + " hartree",
                             n, kin.e_in);
  }
}

}  // namespace

void validate(const Geometry& geom) {
  for (const Vec3* v : {&geom.k_hat, &geom.k0_hat, &geom.r_hat}) {
    if (!(std::abs(v->norm() - 1.0) <= kUnitTol)) {
      throw ArgumentError("Geometry: direction vectors must be unit norm");
    }
  }
  if (!(geom.R > 0.0)) throw ArgumentError("Geometry: R must be > 0");
}

Complex f_from_factors(const channels::AmplitudeFactors& factors, int parity_product, int n,
                       const Vec3& k, const Vec3& k0, const Vec3& r_vec) {
  const double kr = k.dot(r_vec);
  const double k0r = k0.dot(r_vec);
  const Complex om_p = factors.omega_plus[n];
  const Complex om_m = factors.omega_minus[n];
  if (parity_product > 0) {
    return -2.0 * om_p * std::cos(kr) * std::cos(k0r) - 2.0 * om_m * std::sin(kr) * std::sin(k0r);
  }
  const Complex i(0.0, 1.0);
  return 2.0 * i * om_m * std::cos(kr) * std::sin(k0r) -
         2.0 * i * om_p * std::sin(kr) * std::cos(k0r);
}

Complex f_fixed_nuclei(const channels::ChannelModel& model, const channels::Kinematics& kin,
                       int n, const Geometry& geom) {
  validate(geom);
  require_open(kin, n);
  const auto factors = channels::amplitude_factors(model, kin, geom.R);
  const Vec3 k = kin.k[n].real() * geom.k_hat;
  const Vec3 k0 = kin.k0() * geom.k0_hat;
  return f_from_factors(factors, model.parity_product(n), n, k, k0, geom.R * geom.r_hat);
}

int default_l_max(double k_plus_k0, double R) {
  return static_cast<int>(std::ceil(k_plus_k0 * R)) + 20;
}

Complex f_partial_wave(const channels::ChannelModel& model, const channels::Kinematics& kin,
                       int n, const Geometry& geom, std::optional<int> l_max) {
  validate(geom);
  require_open(kin, n);
  const auto factors = channels::amplitude_factors(model, kin, geom.R);
  const Vec3 k = kin.k[n].real() * geom.k_hat;
  const Vec3 k0 = kin.k0() * geom.k0_hat;
  const Vec3 sum_vec = k + k0;
  const Vec3 diff_vec = k - k0;
  const double q_sum = sum_vec.norm();
  const double q_diff = diff_vec.norm();

  const int top = l_max.value_or(default_l_max(q_sum, geom.R));
  if (top < 0 || top > numerics::kMaxOrder) {
    throw ArgumentError("f_partial_wave: l_max out of range");
  }

  // Cosines between the molecular axis and unit(k +- k0); irrelevant when the
  // corresponding momentum vanishes because only j_0(0) = 1 survives.
  const double c_sum = q_sum > kZeroMomentum ? geom.r_hat.dot(sum_vec) / q_sum : 1.0;
  const double c_diff = q_diff > kZeroMomentum ? geom.r_hat.dot(diff_vec) / q_diff : 1.0;

  const auto size = static_cast<std::size_t>(top) + 1;
  std::vector<double> j_sum(size), j_diff(size), p_sum(size), p_diff(size);
  numerics::sph_bessel_j_sequence(q_sum * geom.R, j_sum);
  numerics::sph_bessel_j_sequence(q_diff * geom.R, j_diff);
  numerics::legendre_p_sequence(c_sum, p_sum);
  numerics::legendre_p_sequence(c_diff, p_diff);

  const Complex om_minus_diff = factors.omega_plus[n] - factors.omega_minus[n];
  const Complex om_plus_sum = factors.omega_plus[n] + factors.omega_minus[n];
  const int first = model.parity_product(n) > 0 ? 0 : 1;

  static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Complex total = 0.0;
  std::vector<double> tail;
  for (int l = first; l <= top; l += 2) {
    const Complex term = -kIPow[l % 4] * static_cast<double>(2 * l + 1) *
                         (om_minus_diff * j_sum[l] * p_sum[l] + om_plus_sum * j_diff[l] * p_diff[l]);
    total += term;
    tail.push_back(std::abs(term));
  }
  if (tail.size() >= 3 && std::abs(total) > 0.0) {
    bool diverging = true;
    for (std::size_t i = tail.size() - 3; i < tail.size(); ++i) {
      diverging = diverging && tail[i] > kTailTol * std::abs(total);
    }
    if (diverging) {
      throw ConvergenceError("f_partial_wave: series not converged at l_max = " +
                             std::to_string(top));
    }
  }
  return total;
}

}  // namespace zrp::amplitude
