#include "zrp/xsection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zrp/errors.hpp"
#include "zrp/numerics.hpp"
#include "zrp/units.hpp"

namespace zrp::xsection {

namespace {

using numerics::sinc_safe;
constexpr double kPi = units::kPi;

void check_options(const Options& opts) {
  if (opts.radial_nodes < 2) throw ArgumentError("xsection: radial_nodes must be >= 2");
  if (!(opts.tail_tol > 0.0)) throw ArgumentError("xsection: tail_tol must be > 0");
  if (opts.l_pad < 1) throw ArgumentError("xsection: l_pad must be >= 1");
  if (opts.l_max < 0 || opts.l_max > numerics::kMaxOrder) {
    throw ArgumentError("xsection: l_max out of range");
  }
}

[[noreturn]] void throw_closed(int n, double e_in) {
  throw ClosedChannelError("channel " + std::to_string(n) + " closed at E=" +
                               std::to_string(units::hartree_to_ev(e_in)) + " eV",
                           n, e_in);
}

// |k -+ k0| for scattering angle theta.
std::pair<double, double> momentum_transfer(double k, double k0, double angle) {
  const double c = std::cos(angle);
  const double base = k * k + k0 * k0;
  const double diff = std::sqrt(std::max(0.0, base - 2.0 * k * k0 * c));
  const double sum = std::sqrt(std::max(0.0, base + 2.0 * k * k0 * c));
  return {diff, sum};
}

// Accumulates contributions of a partial-wave series and applies the
// three-consecutive-small-terms stop rule.
class TailTracker {
 public:
  TailTracker(double tol, int l_min) : tol_(tol), l_min_(l_min) {}

  // Returns true once the series can stop after adding `term` at order l.
  bool add(double term, int l) {
    sum_ += term;
    small_run_ = std::abs(term) <= tol_ * std::abs(sum_) ? small_run_ + 1 : 0;
    return small_run_ >= 3 && l >= l_min_;
  }
  double sum() const { return sum_; }

 private:
  double tol_;
  int l_min_;
  double sum_ = 0.0;
  int small_run_ = 0;
};

}  // namespace

const char* to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::dcs_pure: return "dcs_pure";
    case CurveKind::dcs_vib: return "dcs_vib";
    case CurveKind::ics_pure: return "ics_pure";
    case CurveKind::ics_vib: return "ics_vib";
  }
  return "unknown";
}

PureElectronic::PureElectronic(const channels::ChannelModel& model,
                               const molecule::MorseState& morse0, int v, double e_in, int n,
                               const Options& opts) {
  check_options(opts);
  if (n < 0 || n >= model.size()) throw ArgumentError("PureElectronic: channel out of range");
  const auto kin = channels::kinematics(model, e_in);
  if (!kin.is_open(n)) throw_closed(n, e_in);
  eta_ = model.parity_product(n);
  k0_ = kin.k0();
  k_ = kin.k[n].real();

  const molecule::VibHarmonic x0(morse0, v);
  const auto grid = molecule::reference_grid(morse0, v, opts.radial_nodes);
  const std::size_t m = grid.size();
  radius_ = grid.nodes;
  weight_.resize(m);
  om_plus_.resize(m);
  om_minus_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double x = x0(radius_[i]);
    weight_[i] = grid.weights[i] * x * x;
    om_plus_[i] = channels::omega(model, kin, channels::Sign::plus, radius_[i])[n];
    om_minus_[i] = channels::omega(model, kin, channels::Sign::minus, radius_[i])[n];
  }
}

double PureElectronic::dcs(double angle) const {
  if (k_ == 0.0) return 0.0;
  const auto [q_diff, q_sum] = momentum_transfer(k_, k0_, angle);
  const double eta = eta_;
  double total = 0.0;
  for (std::size_t i = 0; i < radius_.size(); ++i) {
    const double R = radius_[i];
    const double s0 = sinc_safe(2.0 * k0_ * R);
    const double sk = sinc_safe(2.0 * k_ * R);
    const double h_diff = 0.5 * sinc_safe(2.0 * q_diff * R);
    const double h_sum = 0.5 * sinc_safe(2.0 * q_sum * R);
    const double a_plus = 1.0 + s0 + eta * sk + eta * (h_diff + h_sum);
    const double a_minus = 1.0 - s0 - eta * sk + eta * (h_diff + h_sum);
    const double a_cross = eta * (h_diff - h_sum);
    const double bracket = std::norm(om_plus_[i]) * a_plus + std::norm(om_minus_[i]) * a_minus +
                           2.0 * (om_plus_[i] * std::conj(om_minus_[i])).real() * a_cross;
    total += weight_[i] * bracket;
  }
  return k_ / k0_ * total;
}

double PureElectronic::ics() const {
  if (k_ == 0.0) return 0.0;
  const double eta = eta_;
  double total = 0.0;
  for (std::size_t i = 0; i < radius_.size(); ++i) {
    const double R = radius_[i];
    const double s0 = sinc_safe(2.0 * k0_ * R);
    const double sk = sinc_safe(2.0 * k_ * R);
    total += weight_[i] * (std::norm(om_plus_[i]) * (1.0 + eta * sk) * (1.0 + s0) +
                           std::norm(om_minus_[i]) * (1.0 - eta * sk) * (1.0 - s0));
  }
  return 4.0 * kPi * k_ / k0_ * total;
}

std::optional<double> vibronic_momentum(const molecule::MorseState& morse0,
                                        const molecule::MorseState& morse_n, int v, int v_prime,
                                        double e_in) {
  const double excess =
      e_in + molecule::energy_level(morse0, v) - molecule::energy_level(morse_n, v_prime);
  if (excess < 0.0) return std::nullopt;
  return std::sqrt(2.0 * excess);
}

Vibronic::Vibronic(const channels::ChannelModel& model, const molecule::MorseState& morse0,
                   const molecule::MorseState& morse_n, int v, int v_prime, double e_in, int n,
                   const Options& opts)
    : opts_(opts) {
  check_options(opts);
  if (n < 0 || n >= model.size()) throw ArgumentError("Vibronic: channel out of range");
  auto kin = channels::kinematics(model, e_in);
  const auto k_out = vibronic_momentum(morse0, morse_n, v, v_prime, e_in);
  if (!k_out) throw_closed(n, e_in);
  if (n != 0) kin = kin.with_momentum(n, *k_out);
  eta_ = model.parity_product(n);
  k0_ = kin.k0();
  k_ = *k_out;

  const molecule::VibHarmonic x0(morse0, v);
  const molecule::VibHarmonic xn(morse_n, v_prime);
  const auto [lo0, hi0] = molecule::reference_interval(morse0, v);
  const auto [lon, hin] = molecule::reference_interval(morse_n, v_prime);
  const auto grid = numerics::gauss_rule(opts.radial_nodes, std::min(lo0, lon), std::max(hi0, hin));
  r_hi_ = grid.hi;

  const std::size_t m = grid.size();
  radius_ = grid.nodes;
  weight_.resize(m);
  om_plus_.resize(m);
  om_minus_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    weight_[i] = grid.weights[i] * xn(radius_[i]) * x0(radius_[i]);
    om_plus_[i] = channels::omega(model, kin, channels::Sign::plus, radius_[i])[n];
    om_minus_[i] = channels::omega(model, kin, channels::Sign::minus, radius_[i])[n];
  }
}

SeriesValue Vibronic::dcs_series(double angle) const {
  if (k_ == 0.0) return {0.0, 0};
  const auto [q_diff, q_sum] = momentum_transfer(k_, k0_, angle);
  double cos_between = 0.0;
  if (q_diff > 0.0 && q_sum > 0.0) {
    cos_between = std::clamp((k_ * k_ - k0_ * k0_) / (q_sum * q_diff), -1.0, 1.0);
  }
  const int first = eta_ > 0 ? 0 : 1;
  const int l_min = static_cast<int>(std::ceil(q_sum * r_hi_));
  const bool adaptive = opts_.l_max == 0;
  int l_top = adaptive ? l_min + opts_.l_pad : opts_.l_max;

  while (true) {
    l_top = std::min(l_top, numerics::kMaxOrder);
    const auto size = static_cast<std::size_t>(l_top) + 1;
    std::vector<Complex> g_sum(size), g_diff(size);
    std::vector<double> j_sum(size), j_diff(size), legendre(size);
    for (std::size_t i = 0; i < radius_.size(); ++i) {
      numerics::sph_bessel_j_sequence(q_sum * radius_[i], j_sum);
      numerics::sph_bessel_j_sequence(q_diff * radius_[i], j_diff);
      const Complex a = weight_[i] * (om_plus_[i] - om_minus_[i]);
      const Complex b = weight_[i] * (om_plus_[i] + om_minus_[i]);
      for (std::size_t l = 0; l < size; ++l) {
        g_sum[l] += a * j_sum[l];
        g_diff[l] += b * j_diff[l];
      }
    }
    numerics::legendre_p_sequence(cos_between, legendre);

    TailTracker tail(opts_.tail_tol, l_min);
    for (int l = first; l <= l_top; l += 2) {
      const double term =
          (2.0 * l + 1.0) * (std::norm(g_sum[l]) + std::norm(g_diff[l]) +
                             2.0 * (g_sum[l] * std::conj(g_diff[l])).real() * legendre[l]);
      if (tail.add(term, l) && adaptive) return {k_ / k0_ * tail.sum(), l};
    }
    if (!adaptive) return {k_ / k0_ * tail.sum(), l_top};
    if (l_top >= numerics::kMaxOrder) {
      throw ConvergenceError("dcs_vib: partial-wave sum not converged below the order cap");
    }
    l_top += opts_.l_pad;
  }
}

SeriesValue Vibronic::ics_series() const {
  if (k_ == 0.0) return {0.0, 0};
  // Omega(+) pairs with even l, Omega(-) with odd l. The parity of L follows
  // from eta_0 eta_n.
  const int l_parity_plus = eta_ > 0 ? 0 : 1;
  const int l_parity_minus = eta_ > 0 ? 1 : 0;
  const int l_min = static_cast<int>(std::ceil(std::max(k_, k0_) * r_hi_));
  const bool adaptive = opts_.l_max == 0;
  int l_top = adaptive ? l_min + opts_.l_pad : opts_.l_max;
  const std::size_t m = radius_.size();

  while (true) {
    l_top = std::min(l_top, numerics::kMaxOrder);
    const auto size = static_cast<std::size_t>(l_top) + 1;
    std::vector<double> j_in(m * size), j_out(m * size);
    for (std::size_t i = 0; i < m; ++i) {
      numerics::sph_bessel_j_sequence(k0_ * radius_[i], {j_in.data() + i * size, size});
      numerics::sph_bessel_j_sequence(k_ * radius_[i], {j_out.data() + i * size, size});
    }
    auto shell_term = [&](int l, int L) {
      const bool plus = l % 2 == 0;
      if (L % 2 != (plus ? l_parity_plus : l_parity_minus)) return 0.0;
      const auto& om = plus ? om_plus_ : om_minus_;
      Complex q = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        q += weight_[i] * om[i] * (j_in[i * size + l] * j_out[i * size + L]);
      }
      return (2.0 * l + 1.0) * (2.0 * L + 1.0) * std::norm(q);
    };

    TailTracker tail(opts_.tail_tol, l_min);
    for (int s = 0; s <= l_top; ++s) {
      double shell = 0.0;
      for (int L = 0; L <= s; ++L) shell += shell_term(s, L);
      for (int l = 0; l < s; ++l) shell += shell_term(l, s);
      if (tail.add(shell, s) && adaptive) return {16.0 * kPi * k_ / k0_ * tail.sum(), s};
    }
    if (!adaptive) return {16.0 * kPi * k_ / k0_ * tail.sum(), l_top};
    if (l_top >= numerics::kMaxOrder) {
      throw ConvergenceError("ics_vib: partial-wave sum not converged below the order cap");
    }
    l_top += opts_.l_pad;
  }
}

double dcs_pure(const channels::ChannelModel& model, const molecule::MorseState& morse0, int v,
                double e_in, int n, double angle, const Options& opts) {
  return PureElectronic(model, morse0, v, e_in, n, opts).dcs(angle);
}

double dcs_vib(const channels::ChannelModel& model, const molecule::MorseState& morse0,
               const molecule::MorseState& morse_n, int v, int v_prime, double e_in, int n,
               double angle, const Options& opts) {
  return Vibronic(model, morse0, morse_n, v, v_prime, e_in, n, opts).dcs(angle);
}

double ics_pure(const channels::ChannelModel& model, const molecule::MorseState& morse0, int v,
                double e_in, int n, const Options& opts) {
  return PureElectronic(model, morse0, v, e_in, n, opts).ics();
}

double ics_vib(const channels::ChannelModel& model, const molecule::MorseState& morse0,
               const molecule::MorseState& morse_n, int v, int v_prime, double e_in, int n,
               const Options& opts) {
  return Vibronic(model, morse0, morse_n, v, v_prime, e_in, n, opts).ics();
}

}  // namespace zrp::xsection
