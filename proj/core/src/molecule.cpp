#include "zrp/molecule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "zrp/errors.hpp"

namespace zrp::molecule {

namespace {

constexpr double kMinRadius = 1e-3;
constexpr double kTailFraction = 1e-13;
constexpr int kScanPoints = 40000;

void check_level(const MorseState& s, int v, const char* fn) {
  const int top = v_max(s);
  if (v < 0 || v > top) {
    throw ArgumentError(std::string(fn) + ": vibrational level " + std::to_string(v) +
                        " outside [0, " + std::to_string(top) + "]");
  }
}

// ln X_v(R)^2 up to the v-dependent normalisation constant.
double log_density(const MorseState& s, int v, double R) {
  const double log_z = std::log(s.omega() / s.anharm()) - s.range_parameter() * (R - s.r_eq());
  const double z = std::exp(log_z);
  if (!std::isfinite(z)) return -std::numeric_limits<double>::infinity();
  const double x = xi(s, v);
  const double lag = numerics::laguerre(v, x, z);
  if (lag == 0.0) return -std::numeric_limits<double>::infinity();
  return x * log_z - z + 2.0 * std::log(std::abs(lag));
}

}  // namespace

MorseState::MorseState(double omega, double anharm, double r_eq, double u_offset, double mu)
    : omega_(omega), anharm_(anharm), r_eq_(r_eq), u_offset_(u_offset), mu_(mu) {
  if (!(omega > 0.0)) throw ModelError("MorseState: omega must be > 0");
  if (!(anharm > 0.0)) throw ModelError("MorseState: anharmonicity must be > 0");
  if (!(omega / anharm > 1.0)) {
    throw ModelError("MorseState: omega/anharm must exceed 1 (no bound vibrational state)");
  }
  if (!(r_eq > 0.0)) throw ModelError("MorseState: r_eq must be > 0");
  if (!(mu > 0.0)) throw ModelError("MorseState: reduced mass must be > 0");
  if (!std::isfinite(u_offset)) throw ModelError("MorseState: u_offset must be finite");
}

MorseState MorseState::ground(double omega, double anharm, double r_eq, double mu) {
  return MorseState(omega, anharm, r_eq, -omega / 2.0 + anharm / 4.0, mu);
}

MorseState MorseState::with_ground_level(double omega, double anharm, double r_eq,
                                         double level0, double mu) {
  return MorseState(omega, anharm, r_eq, level0 + (-omega / 2.0 + anharm / 4.0), mu);
}

double MorseState::range_parameter() const noexcept {
  return 2.0 * std::sqrt(2.0 * mu_ * anharm_);
}

double MorseState::depth() const noexcept { return omega_ * omega_ / (4.0 * anharm_); }

double morse_potential(const MorseState& s, double R) {
  if (!(R > 0.0)) throw ArgumentError("morse_potential: R must be > 0");
  const double t = 1.0 - std::exp(-s.range_parameter() * (R - s.r_eq()));
  return s.depth() * t * t + s.u_offset();
}

int v_max(const MorseState& s) {
  const double ratio = s.omega() / s.anharm();
  if (!(ratio > 1.0)) throw ModelError("v_max: no bound vibrational state");
  // xi > 0  <=>  v < (ratio - 1) / 2; an exact tie is excluded.
  return static_cast<int>(std::ceil((ratio - 1.0) / 2.0)) - 1;
}

double xi(const MorseState& s, int v) { return s.omega() / s.anharm() - 2.0 * v - 1.0; }

double energy_level(const MorseState& s, int v) {
  check_level(s, v, "energy_level");
  const double h = v + 0.5;
  return (s.omega() * h - s.anharm() * h * h) + s.u_offset();
}

std::pair<double, double> reference_interval(const MorseState& s, int v_hi) {
  check_level(s, v_hi, "reference_interval");

  // Grow the outer edge until every density is far below its peak there.
  const double a = s.range_parameter();
  double r_far = s.r_eq() + 4.0 / a;
  for (int guard = 0; guard < 60; ++guard) {
    bool small = true;
    for (int v = 0; v <= v_hi && small; ++v) {
      double peak = -std::numeric_limits<double>::infinity();
      for (int i = 0; i <= 64; ++i) {
        const double R = kMinRadius + (r_far - kMinRadius) * i / 64.0;
        peak = std::max(peak, log_density(s, v, R));
      }
      small = log_density(s, v, r_far) - peak < -80.0;
    }
    if (small) break;
    r_far = s.r_eq() + 2.0 * (r_far - s.r_eq());
  }

  const double step = (r_far - kMinRadius) / (kScanPoints - 1);
  std::vector<double> logd(kScanPoints);
  std::vector<double> cum(kScanPoints);
  double lo = r_far;
  double hi = kMinRadius;
  for (int v = 0; v <= v_hi; ++v) {
    double peak = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < kScanPoints; ++i) {
      logd[i] = log_density(s, v, kMinRadius + step * i);
      peak = std::max(peak, logd[i]);
    }
    cum[0] = 0.0;
    double prev = std::exp(logd[0] - peak);
    for (int i = 1; i < kScanPoints; ++i) {
      const double cur = std::exp(logd[i] - peak);
      cum[i] = cum[i - 1] + 0.5 * step * (prev + cur);
      prev = cur;
    }
    const double total = cum.back();
    int i_lo = 0;
    while (i_lo + 1 < kScanPoints && cum[i_lo + 1] <= kTailFraction * total) ++i_lo;
    int i_hi = kScanPoints - 1;
    while (i_hi > 0 && total - cum[i_hi - 1] <= kTailFraction * total) --i_hi;
    lo = std::min(lo, kMinRadius + step * i_lo);
    hi = std::max(hi, kMinRadius + step * i_hi);
  }
  const double pad = 0.1 * (hi - lo);
  return {std::max(kMinRadius, lo - pad), hi + pad};
}

numerics::QuadratureRule reference_grid(const MorseState& s, int v_hi, int nodes) {
  const auto [lo, hi] = reference_interval(s, v_hi);
  return numerics::gauss_rule(nodes, lo, hi);
}

VibHarmonic::VibHarmonic(const MorseState& state, int v)
    : state_(state),
      v_(v),
      xi_(molecule::xi(state, v)),
      log_ratio_(std::log(state.omega() / state.anharm())),
      range_(state.range_parameter()) {
  check_level(state, v, "VibHarmonic");
  // C = Gamma(xi + v + 1) / (v! xi sqrt(8 mu anharm))
  const double log_c = numerics::ln_gamma(xi_ + v + 1.0) - numerics::ln_gamma(v + 1.0) -
                       std::log(xi_) - 0.5 * std::log(8.0 * state.mu() * state.anharm());
  log_analytic_norm_ = -0.5 * log_c;

  const auto grid = reference_grid(state, v);
  const double norm2 = grid.integrate([this](double R) {
    const double x = (*this)(R);
    return x * x;
  });
  log_renorm_ = -0.5 * std::log(norm2);
}

double VibHarmonic::log_value(double R, double& laguerre_sign) const {
  const double log_z = log_ratio_ - range_ * (R - state_.r_eq());
  const double z = std::exp(log_z);
  laguerre_sign = 1.0;
  if (!std::isfinite(z)) return -std::numeric_limits<double>::infinity();
  const double lag = numerics::laguerre(v_, xi_, z);
  laguerre_sign = lag < 0.0 ? -1.0 : 1.0;
  if (lag == 0.0) return -std::numeric_limits<double>::infinity();
  return log_analytic_norm_ + log_renorm_ + 0.5 * xi_ * log_z - 0.5 * z +
         std::log(std::abs(lag));
}

double VibHarmonic::operator()(double R) const {
  if (!(R > 0.0)) throw ArgumentError("VibHarmonic: R must be > 0");
  double sign = 1.0;
  const double lv = log_value(R, sign);
  return sign * std::exp(lv);
}

double VibHarmonic::norm() const noexcept { return std::exp(log_analytic_norm_ + log_renorm_); }

double VibHarmonic::analytic_norm() const noexcept { return std::exp(log_analytic_norm_); }

double vib_harmonic(const MorseState& s, int v, double R) { return VibHarmonic(s, v)(R); }

}  // namespace zrp::molecule
