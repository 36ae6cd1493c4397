#pragma once

// Slow, direct evaluations used only to check the library's recurrences.

#include <cmath>

namespace zrp::test {

inline long double binomial(int n, int k) {
  long double c = 1.0L;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

/// P_l(x) = 2^-l sum_k (-1)^k C(l,k) C(2l-2k, l) x^(l-2k).
inline double legendre_explicit(int l, double x) {
  long double sum = 0.0L;
  for (int k = 0; 2 * k <= l; ++k) {
    const long double term = binomial(l, k) * binomial(2 * l - 2 * k, l) *
                             std::pow(static_cast<long double>(x), l - 2 * k);
    sum += (k % 2 == 0) ? term : -term;
  }
  return static_cast<double>(sum / std::pow(2.0L, l));
}

/// Ascending series j_l(z) = z^l/(2l+1)!! sum_k (-z^2/2)^k / (k! prod_{j=1..k}(2l+2j+1)).
inline double bessel_series(int l, double z, int terms = 60) {
  long double prefactor = 1.0L;
  for (int j = 1; j <= l; ++j) prefactor *= static_cast<long double>(z) / (2 * j + 1);
  long double term = 1.0L;
  long double sum = 1.0L;
  const long double h = -0.5L * z * z;
  for (int k = 1; k < terms; ++k) {
    term *= h / (k * (2.0L * l + 2 * k + 1));
    sum += term;
  }
  return static_cast<double>(prefactor * sum);
}

/// j_0, j_1, j_2 from their trigonometric closed forms.
inline double bessel_trig(int l, double z) {
  const double s = std::sin(z);
  const double c = std::cos(z);
  switch (l) {
    case 0: return s / z;
    case 1: return s / (z * z) - c / z;
    default: return (3.0 / (z * z) - 1.0) * s / z - 3.0 * c / (z * z);
  }
}

/// L_v^xi(z) = sum_k C(v+xi, v-k) (-z)^k / k!, generalized binomial as a product.
inline double laguerre_direct(int v, double xi, double z) {
  long double sum = 0.0L;
  long double zk_over_fact = 1.0L;
  for (int k = 0; k <= v; ++k) {
    if (k > 0) zk_over_fact *= -static_cast<long double>(z) / k;
    long double binom = 1.0L;
    for (int j = 1; j <= v - k; ++j) binom *= (static_cast<long double>(xi) + k + j) / j;
    sum += binom * zk_over_fact;
  }
  return static_cast<double>(sum);
}

/// ln Gamma(x) for x >= 1 by Gamma(x+1) = x Gamma(x), seeded on [1, 2).
inline double ln_gamma_recursion(double x) {
  long double y = x;
  long double acc = 0.0L;
  while (y >= 2.0L) {
    y -= 1.0L;
    acc += std::log(y);
  }
  return static_cast<double>(acc + std::lgamma(y));
}

}  // namespace zrp::test
