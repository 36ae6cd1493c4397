#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "frozen_values.hpp"
#include "generators.hpp"
#include "series_oracles.hpp"
#include "zrp/errors.hpp"
#include "zrp/numerics.hpp"

namespace zrp::numerics {
namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(Legendre, LowOrders) {
  EXPECT_EQ(legendre_p(0, 0.3), 1.0);
  EXPECT_NEAR(legendre_p(3, 0.5), -0.4375, 1e-15);
}

TEST(Legendre, HighOrderMatchesExplicitSeries) {
  EXPECT_LT(rel(legendre_p(25, 0.7), test::legendre_explicit(25, 0.7)), 1e-12);
  EXPECT_LT(rel(legendre_p(25, 0.7), test::frozen::kLegendre25At0p7), 1e-12);
}

TEST(Legendre, EndpointAndParity) {
  test::Rng rng(11);
  for (int l = 0; l <= 100; ++l) {
    EXPECT_NEAR(legendre_p(l, 1.0), 1.0, 1e-12) << "l=" << l;
    for (int s = 0; s < 5; ++s) {
      const double x = test::uniform(rng, -1.0, 1.0);
      const double sign = (l % 2 == 0) ? 1.0 : -1.0;
      EXPECT_NEAR(legendre_p(l, -x), sign * legendre_p(l, x), 1e-12) << "l=" << l << " x=" << x;
    }
  }
}

TEST(Legendre, SequenceMatchesScalar) {
  std::vector<double> seq(41);
  legendre_p_sequence(-0.37, seq);
  for (int l = 0; l <= 40; ++l) EXPECT_DOUBLE_EQ(seq[l], legendre_p(l, -0.37));
}

TEST(Legendre, RejectsOutOfDomain) {
  EXPECT_THROW(legendre_p(2, 1.0 + 1e-9), DomainError);
  EXPECT_NO_THROW(legendre_p(2, 1.0 + 1e-13));
  EXPECT_THROW(legendre_p(-1, 0.5), ArgumentError);
}

TEST(SphBessel, Origin) {
  EXPECT_EQ(sph_bessel_j(0, 1e-30), 1.0);
  EXPECT_EQ(sph_bessel_j(0, 0.0), 1.0);
  EXPECT_EQ(sph_bessel_j(3, 0.0), 0.0);
}

TEST(SphBessel, FrozenValues) {
  EXPECT_LT(rel(sph_bessel_j(1, 1.0), test::frozen::kJ1At1), 1e-13);
  EXPECT_NEAR(sph_bessel_j(1, 1.0), 0.3011687, 1e-7);
  EXPECT_LT(rel(sph_bessel_j(10, 3.0), test::frozen::kJ10At3), 1e-12);
  EXPECT_LT(rel(sph_bessel_j(30, 10.0), test::frozen::kJ30At10), 1e-12);
  EXPECT_LT(rel(sph_bessel_j(5, 100.0), test::frozen::kJ5At100), 1e-12);
  EXPECT_LT(rel(sph_bessel_j(60, 0.5), test::frozen::kJ60At0p5), 1e-12);
}

TEST(SphBessel, SeriesAndTrigOracles) {
  for (double z : {0.1, 1.0, 10.0}) {
    for (int l = 0; l <= 30; ++l) {
      const double j = sph_bessel_j(l, z);
      if (z < l) {
        EXPECT_LT(rel(j, test::bessel_series(l, z)), 1e-10) << "l=" << l << " z=" << z;
      }
      if (l <= 2) {
        EXPECT_NEAR(j, test::bessel_trig(l, z), 1e-13 * std::max(1.0, std::abs(j)))
            << "l=" << l << " z=" << z;
      }
    }
  }
}

TEST(SphBessel, AgreesWithStandardLibrary) {
  test::Rng rng(12);
  for (int s = 0; s < 2000; ++s) {
    const double z = std::exp(test::uniform(rng, std::log(1e-3), std::log(100.0)));
    const int l = static_cast<int>(test::uniform(rng, 0.0, 60.999));
    const double ref = std::sph_bessel(static_cast<unsigned>(l), z);
    if (std::abs(ref) < 1e-280) continue;
    // Near zeros of j_l only absolute accuracy on the envelope scale is meaningful.
    const double scale = std::max(std::abs(ref), z > l ? 1.0 / z : 0.0);
    EXPECT_LE(std::abs(sph_bessel_j(l, z) - ref), 1e-10 * scale) << "l=" << l << " z=" << z;
  }
}

TEST(SphBessel, SequenceMatchesScalar) {
  for (double z : {0.0, 0.37, 4.2, 55.0}) {
    std::vector<double> seq(80);
    sph_bessel_j_sequence(z, seq);
    for (int l = 0; l < 80; ++l) {
      const double j = sph_bessel_j(l, z);
      EXPECT_NEAR(seq[l], j, 1e-14 * std::max(std::abs(j), 1e-300)) << "l=" << l << " z=" << z;
    }
  }
}

TEST(SphBessel, RejectsNegativeArgument) {
  EXPECT_THROW(sph_bessel_j(0, -1.0), DomainError);
}

TEST(Laguerre, ClosedForms) {
  EXPECT_EQ(laguerre(0, 33.84, 5.0), 1.0);
  EXPECT_NEAR(laguerre(1, 3.5, 1.25), 1.0 + 3.5 - 1.25, 1e-15);
}

TEST(Laguerre, DirectSummation) {
  EXPECT_LT(rel(laguerre(5, 2.5, 1.3), test::frozen::kLaguerre5_2p5_1p3), 1e-13);
  EXPECT_LT(rel(laguerre(5, 2.5, 1.3), test::laguerre_direct(5, 2.5, 1.3)), 1e-13);
  EXPECT_LT(rel(laguerre(16, 1.84, 30.0), test::laguerre_direct(16, 1.84, 30.0)), 1e-10);
}

TEST(Laguerre, ThreeTermRecurrenceHolds) {
  test::Rng rng(13);
  for (int s = 0; s < 500; ++s) {
    const int v = static_cast<int>(test::uniform(rng, 1.0, 30.0));
    const double xi = test::uniform(rng, 0.1, 40.0);
    const double z = test::uniform(rng, 0.0, 60.0);
    const double lhs = (v + 1) * laguerre(v + 1, xi, z);
    const double rhs = (2 * v + xi + 1 - z) * laguerre(v, xi, z) - (v + xi) * laguerre(v - 1, xi, z);
    const double scale = std::max({std::abs(lhs), std::abs((2 * v + xi + 1 - z) * laguerre(v, xi, z)),
                                   std::abs((v + xi) * laguerre(v - 1, xi, z))});
    EXPECT_LE(std::abs(lhs - rhs), 1e-10 * scale) << "v=" << v << " xi=" << xi << " z=" << z;
  }
}

TEST(Laguerre, RejectsBadArguments) {
  EXPECT_THROW(laguerre(2, 0.0, 1.0), DomainError);
  EXPECT_THROW(laguerre(2, 1.0, -1.0), DomainError);
  EXPECT_THROW(laguerre(-1, 1.0, 1.0), ArgumentError);
}

TEST(LnGamma, KnownValues) {
  EXPECT_NEAR(ln_gamma(1.0), 0.0, 1e-15);
  EXPECT_NEAR(ln_gamma(2.0), 0.0, 1e-15);
  EXPECT_NEAR(ln_gamma(5.0), std::log(24.0), 1e-14);
  EXPECT_LT(rel(ln_gamma(0.1), test::frozen::kLnGamma0p1), 1e-14);
}

TEST(LnGamma, MatchesRecursionOracle) {
  EXPECT_LT(rel(ln_gamma(34.84), test::frozen::kLnGamma34p84), 1e-14);
  EXPECT_LT(rel(ln_gamma(34.84), test::ln_gamma_recursion(34.84)), 1e-13);
  test::Rng rng(14);
  for (int s = 0; s < 200; ++s) {
    const double x = test::uniform(rng, 1.0, 200.0);
    EXPECT_NEAR(ln_gamma(x), test::ln_gamma_recursion(x), 1e-13 * std::max(1.0, std::abs(ln_gamma(x))))
        << "x=" << x;
  }
}

TEST(LnGamma, RejectsNonPositive) {
  EXPECT_THROW(ln_gamma(0.0), DomainError);
  EXPECT_THROW(ln_gamma(-2.5), DomainError);
}

TEST(Sinc, LimitsAndZeros) {
  EXPECT_EQ(sinc_safe(0.0), 1.0);
  EXPECT_NEAR(sinc_safe(1e-9), 1.0, 1e-15);
  EXPECT_NEAR(sinc_safe(std::numbers::pi), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(sinc_safe(-2.0), std::sin(2.0) / 2.0);
}

TEST(Gauss, TwoPointRule) {
  const auto rule = gauss_rule(2, -1.0, 1.0);
  ASSERT_EQ(rule.size(), 2u);
  EXPECT_NEAR(rule.nodes[0], -1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(rule.nodes[1], 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(rule.weights[0], 1.0, 1e-15);
  EXPECT_NEAR(rule.weights[1], 1.0, 1e-15);
  EXPECT_NEAR(gauss_rule(2, 0.0, 1.0).integrate([](double x) { return x * x * x; }), 0.25, 1e-16);
}

TEST(Gauss, SineIntegral) {
  const auto rule = gauss_rule(32, 0.0, std::numbers::pi);
  EXPECT_NEAR(rule.integrate([](double x) { return std::sin(x); }), 2.0, 1e-13);
}

TEST(Gauss, ExactForMonomialsUpToDegree2nMinus1) {
  for (int n : {2, 5, 16, 64}) {
    const auto rule = gauss_rule(n, -0.5, 2.0);
    for (int d = 0; d <= 2 * n - 1; ++d) {
      const double exact = (std::pow(2.0, d + 1) - std::pow(-0.5, d + 1)) / (d + 1);
      const double got = rule.integrate([d](double x) { return std::pow(x, d); });
      EXPECT_LE(std::abs(got - exact), 1e-13 * std::abs(exact)) << "n=" << n << " d=" << d;
    }
  }
}

TEST(Gauss, RejectsBadArguments) {
  EXPECT_THROW(gauss_rule(1, 0.0, 1.0), ArgumentError);
  EXPECT_THROW(gauss_rule(4, 1.0, 1.0), ArgumentError);
}

}  // namespace
}  // namespace zrp::numerics
