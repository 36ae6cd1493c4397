#include "zrp/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "zrp/errors.hpp"
#include "zrp/units.hpp"

namespace zrp::numerics {

namespace {

void check_order(int l, const char* fn) {
  if (l < 0 || l > kMaxOrder) {
    throw ArgumentError(std::string(fn) + ": order " + std::to_string(l) +
                        " outside [0, " + std::to_string(kMaxOrder) + "]");
  }
}

}  // namespace

double legendre_p(int l, double x) {
  check_order(l, "legendre_p");
  if (!(std::abs(x) <= 1.0 + 1e-12)) {
    throw DomainError("legendre_p: |x| > 1 (x = " + std::to_string(x) + ")");
  }
  x = std::clamp(x, -1.0, 1.0);
  if (l == 0) return 1.0;
  double p_prev = 1.0;
  double p = x;
  for (int n = 1; n < l; ++n) {
    const double p_next = ((2 * n + 1) * x * p - n * p_prev) / (n + 1);
    p_prev = p;
    p = p_next;
  }
  return p;
}

void legendre_p_sequence(double x, std::span<double> out) {
  if (out.empty()) return;
  check_order(static_cast<int>(out.size()) - 1, "legendre_p_sequence");
  if (!(std::abs(x) <= 1.0 + 1e-12)) {
    throw DomainError("legendre_p_sequence: |x| > 1 (x = " + std::to_string(x) + ")");
  }
  x = std::clamp(x, -1.0, 1.0);
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = x;
  for (std::size_t n = 1; n + 1 < out.size(); ++n) {
    const double dn = static_cast<double>(n);
    out[n + 1] = ((2.0 * dn + 1.0) * x * out[n] - dn * out[n - 1]) / (dn + 1.0);
  }
}

void sph_bessel_j_sequence(double z, std::span<double> out) {
  if (out.empty()) return;
  const int lmax = static_cast<int>(out.size()) - 1;
  check_order(lmax, "sph_bessel_j");
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw DomainError("sph_bessel_j: argument must be finite and >= 0");
  }
  if (z == 0.0) {
    out[0] = 1.0;
    std::fill(out.begin() + 1, out.end(), 0.0);
    return;
  }

  // Upward branch: stable while l <= z.
  const int l_up = static_cast<int>(std::min<double>(lmax, std::floor(z)));
  out[0] = sinc_safe(z);
  if (l_up >= 1) {
    out[1] = (out[0] - std::cos(z)) / z;
    for (int l = 1; l < l_up; ++l) {
      out[l + 1] = (2 * l + 1) / z * out[l] - out[l - 1];
    }
  }
  if (lmax == l_up) return;

  // Downward branch for l in (l_up, lmax]. Anchor on whichever of the two
  // highest upward orders is larger in magnitude; adjacent orders never
  // vanish together.
  int anchor = l_up;
  if (l_up >= 1 && std::abs(out[l_up - 1]) > std::abs(out[l_up])) anchor = l_up - 1;

  constexpr double kBig = 1e250;
  constexpr double kShrink = 1e-250;
  const int start = lmax + 20 + static_cast<int>(std::sqrt(40.0 * lmax));
  double above = 0.0;  // f_{n+1}
  double cur = 1.0;    // f_n
  for (int n = start; n > anchor; --n) {
    const double below = (2 * n + 1) / z * cur - above;
    above = cur;
    cur = below;
    const int idx = n - 1;
    if (idx > l_up && idx <= lmax) out[idx] = cur;
    if (std::abs(cur) > kBig) {
      cur *= kShrink;
      above *= kShrink;
      for (int i = std::max(idx, l_up + 1); i <= lmax; ++i) out[i] *= kShrink;
    }
  }
  const double scale = out[anchor] / cur;
  for (int i = l_up + 1; i <= lmax; ++i) out[i] *= scale;
}

double sph_bessel_j(int l, double z) {
  check_order(l, "sph_bessel_j");
  if (l == 0) {
    if (!(z >= 0.0) || !std::isfinite(z)) {
      throw DomainError("sph_bessel_j: argument must be finite and >= 0");
    }
    return sinc_safe(z);
  }
  std::vector<double> buf(static_cast<std::size_t>(l) + 1);
  sph_bessel_j_sequence(z, buf);
  return buf.back();
}

double laguerre(int v, double xi, double z) {
  if (v < 0 || v > kMaxLaguerreDegree) {
    throw ArgumentError("laguerre: degree " + std::to_string(v) + " out of range");
  }
  if (!(xi > 0.0)) {
    throw DomainError("laguerre: upper index xi must be > 0 (unphysical vibrational state)");
  }
  if (!(z >= 0.0)) throw DomainError("laguerre: argument must be >= 0");
  if (v == 0) return 1.0;
  double l_prev = 1.0;
  double l_cur = 1.0 + xi - z;
  for (int k = 1; k < v; ++k) {
    const double l_next = ((2 * k + 1 + xi - z) * l_cur - (k + xi) * l_prev) / (k + 1);
    l_prev = l_cur;
    l_cur = l_next;
  }
  return l_cur;
}

double ln_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("ln_gamma: argument must be > 0");
  if (x < 0.5) return ln_gamma(x + 1.0) - std::log(x);

  // Lanczos, g = 7, n = 9.
  static constexpr std::array<double, 9> kCoef = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double kG = 7.0;
  const double y = x - 1.0;
  double series = kCoef[0];
  for (std::size_t i = 1; i < kCoef.size(); ++i) series += kCoef[i] / (y + static_cast<double>(i));
  const double t = y + kG + 0.5;
  return 0.5 * std::log(2.0 * units::kPi) + (y + 0.5) * std::log(t) - t + std::log(series);
}

double sinc_safe(double x) {
  if (std::abs(x) < 1e-6) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

QuadratureRule gauss_rule(int n, double lo, double hi) {
  if (n < 2) throw ArgumentError("gauss_rule: need at least 2 nodes");
  if (!(lo < hi)) throw ArgumentError("gauss_rule: require lo < hi");

  QuadratureRule rule;
  rule.lo = lo;
  rule.hi = hi;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(units::kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * x * p2 - (j - 1.0) * p3) / j;
      }
      dp = n * (x * p1 - p2) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Derivative at the converged root.
    {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * x * p2 - (j - 1.0) * p3) / j;
      }
      dp = n * (x * p1 - p2) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[n - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = mid;
  return rule;
}

}  // namespace zrp::numerics
