#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace zrp::numerics {

/// Upper bound on polynomial and Bessel orders accepted anywhere in the
/// library. Guards against runaway partial-wave loops.
inline constexpr int kMaxOrder = 1024;

/// Upper bound on the Laguerre degree.
inline constexpr int kMaxLaguerreDegree = 10000;

/// Nodes and positive weights of a quadrature rule on [lo, hi].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double lo = 0.0;
  double hi = 0.0;

  std::size_t size() const noexcept { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// Legendre polynomial P_l(x) by the three-term recurrence.
/// Throws DomainError when |x| > 1 + 1e-12.
double legendre_p(int l, double x);

/// Fills out[l] = P_l(x) for l = 0 .. out.size()-1.
void legendre_p_sequence(double x, std::span<double> out);

/// Spherical Bessel function of the first kind j_l(z), z >= 0.
///
/// Orders l <= z use upward recurrence from the trigonometric closed forms.
/// Orders l > z use Miller's downward recurrence, normalised against an
/// order that the upward branch evaluates accurately.
double sph_bessel_j(int l, double z);

/// Fills out[l] = j_l(z) for l = 0 .. out.size()-1 with the same policy as
/// sph_bessel_j. Cheaper than repeated scalar calls.
void sph_bessel_j_sequence(double z, std::span<double> out);

/// Generalised Laguerre polynomial L_v^xi(z) for real xi > 0.
double laguerre(int v, double xi, double z);

/// ln Gamma(x) for x > 0 (Lanczos approximation, no shared state).
double ln_gamma(double x);

/// sin(x)/x, with a short Taylor series for |x| < 1e-6.
double sinc_safe(double x);

/// Gauss-Legendre rule with n nodes mapped to [lo, hi].
QuadratureRule gauss_rule(int n, double lo, double hi);

}  // namespace zrp::numerics
