#include <cmath>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "zrp/amplitude.hpp"
#include "zrp/errors.hpp"
#include "zrp/oracle.hpp"
#include "zrp/units.hpp"

namespace zrp::amplitude {
namespace {

using channels::Sign;
constexpr double kR0 = 0.7005;

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

TEST(FixedNuclei, AxisPerpendicularToBothMomenta) {
  const auto m = test::h2_model();
  const auto kin = channels::kinematics(m, units::ev_to_hartree(15.0));
  const Geometry g{Vec3(0.6, 0.0, 0.8), Vec3(0.0, 0.0, 1.0), Vec3(0.0, 1.0, 0.0), kR0};
  const auto om = channels::omega(m, kin, Sign::plus, kR0);
  for (int n = 0; n < 2; ++n) {
    EXPECT_LT(rel(f_fixed_nuclei(m, kin, n, g), -2.0 * om[n]), 1e-15) << "n=" << n;
  }
}

TEST(FixedNuclei, OddParityAxisPerpendicularToIncidence) {
  const auto m = test::h2_model(1.40, 0.63, -1);
  const auto kin = channels::kinematics(m, units::ev_to_hartree(15.0));
  const Geometry g{Vec3(0.6, 0.0, 0.8), Vec3(0.0, 0.0, 1.0), Vec3(1.0, 0.0, 0.0), kR0};
  const auto om = channels::omega(m, kin, Sign::plus, kR0);
  const double kr = kin.k[1].real() * g.k_hat.dot(kR0 * g.r_hat);
  const Complex expected = Complex(0.0, -2.0) * om[1] * std::sin(kr);
  EXPECT_LT(rel(f_fixed_nuclei(m, kin, 1, g), expected), 1e-14);
}

TEST(FixedNuclei, AgreesWithDirectBoundaryConditions) {
  test::Rng rng(31);
  for (int size : {2, 3}) {
    for (int s = 0; s < 50; ++s) {
      const auto m = test::model(rng, size);
      const auto kin = channels::kinematics(m, test::uniform(rng, 0.02, 1.5));
      const auto g = test::geometry(rng, 0.3, 1.5);
      for (int n = 0; n < size; ++n) {
        if (!kin.is_open(n)) continue;
        EXPECT_LT(rel(f_fixed_nuclei(m, kin, n, g), oracle::direct_bc_amplitude(m, kin, n, g)), 1e-10);
      }
    }
  }
}

TEST(FixedNuclei, AxisInversionSymmetry) {
  test::Rng rng(32);
  for (int parity : {1, -1}) {
    const auto m = test::h2_model(1.40, 0.63, parity);
    const auto kin = channels::kinematics(m, units::ev_to_hartree(18.0));
    for (int s = 0; s < 30; ++s) {
      auto g = test::geometry(rng, 0.5, 1.0);
      const Complex f = f_fixed_nuclei(m, kin, 1, g);
      g.r_hat = -g.r_hat;
      EXPECT_LT(std::abs(f_fixed_nuclei(m, kin, 1, g) - Complex(parity) * f), 1e-15 * std::abs(f));
    }
  }
}

TEST(FixedNuclei, OutgoingReflection) {
  // For even parity only the Omega(-) term changes sign under k -> -k.
  test::Rng rng(33);
  const auto m = test::h2_model();
  const auto kin = channels::kinematics(m, units::ev_to_hartree(15.0));
  const double k = kin.k[1].real();
  const double k0 = kin.k0();
  for (int s = 0; s < 30; ++s) {
    auto g = test::geometry(rng, 0.5, 1.0);
    const Complex f = f_fixed_nuclei(m, kin, 1, g);
    const double kr = k * g.k_hat.dot(g.R * g.r_hat);
    const double k0r = k0 * g.k0_hat.dot(g.R * g.r_hat);
    const auto om_p = channels::omega(m, kin, Sign::plus, g.R)[1];
    g.k_hat = -g.k_hat;
    const Complex reflected = f_fixed_nuclei(m, kin, 1, g);
    EXPECT_LT(std::abs(f + reflected + 4.0 * om_p * std::cos(kr) * std::cos(k0r)), 1e-14);
  }
}

TEST(FixedNuclei, ClosedAndThresholdChannels) {
  const auto m = test::h2_model();
  const Geometry g{Vec3(0.0, 0.0, 1.0), Vec3(0.0, 0.0, 1.0), Vec3(1.0, 0.0, 0.0), kR0};
  EXPECT_THROW(f_fixed_nuclei(m, channels::kinematics(m, units::ev_to_hartree(10.0)), 1, g),
               ClosedChannelError);
  const auto at = channels::kinematics(m, m.threshold(1));
  EXPECT_NO_THROW(f_fixed_nuclei(m, at, 1, g));
}

TEST(FixedNuclei, RejectsBadGeometry) {
  const auto m = test::h2_model();
  const auto kin = channels::kinematics(m, units::ev_to_hartree(15.0));
  EXPECT_THROW(f_fixed_nuclei(m, kin, 0, {Vec3(0, 0, 2), Vec3(0, 0, 1), Vec3(1, 0, 0), kR0}),
               ArgumentError);
  EXPECT_THROW(f_fixed_nuclei(m, kin, 0, {Vec3(0, 0, 1), Vec3(0, 0, 1), Vec3(1, 0, 0), 0.0}),
               ArgumentError);
  EXPECT_THROW(f_fixed_nuclei(m, kin, 2, {Vec3(0, 0, 1), Vec3(0, 0, 1), Vec3(1, 0, 0), kR0}),
               ArgumentError);
}

TEST(PartialWave, MatchesClosedForm) {
  test::Rng rng(34);
  for (int parity : {1, -1}) {
    const auto m = test::h2_model(1.40, 0.63, parity);
    const auto kin = channels::kinematics(m, units::ev_to_hartree(15.0));
    for (int s = 0; s < 40; ++s) {
      const Geometry g{test::unit_vector(rng), Vec3(0.0, 0.0, 1.0), test::unit_vector(rng),
                       test::uniform(rng, 0.4, 1.2)};
      for (int n = 0; n < 2; ++n) {
        EXPECT_LT(rel(f_partial_wave(m, kin, n, g), f_fixed_nuclei(m, kin, n, g)), 1e-10)
            << "parity=" << parity << " n=" << n;
      }
    }
  }
}

TEST(PartialWave, ForwardElastic) {
  const auto m = test::h2_model();
  const auto kin = channels::kinematics(m, units::ev_to_hartree(15.0));
  const Geometry g{Vec3(0.0, 0.0, 1.0), Vec3(0.0, 0.0, 1.0), Vec3(0.6, 0.0, 0.8), kR0};
  EXPECT_LT(rel(f_partial_wave(m, kin, 0, g), f_fixed_nuclei(m, kin, 0, g)), 1e-12);
}

TEST(PartialWave, TailIsConverged) {
  test::Rng rng(35);
  const auto m = test::h2_model();
  const auto kin = channels::kinematics(m, units::ev_to_hartree(24.0));
  for (int s = 0; s < 20; ++s) {
    const auto g = test::geometry(rng, 0.4, 1.2);
    const double kk = (kin.k[1].real() * g.k_hat + kin.k0() * g.k0_hat).norm();
    const int base = static_cast<int>(std::ceil(kk * g.R)) + 15;
    const Complex short_sum = f_partial_wave(m, kin, 1, g, base);
    const Complex long_sum = f_partial_wave(m, kin, 1, g, base + 40);
    EXPECT_LT(rel(short_sum, long_sum), 1e-10);
  }
}

TEST(PartialWave, DefaultOrder) {
  EXPECT_EQ(default_l_max(1.5, 0.7), 22);
  EXPECT_EQ(default_l_max(0.0, 0.7), 20);
}

TEST(PartialWave, TruncationTooShortIsReported) {
  const auto m = test::h2_model();
  const auto kin = channels::kinematics(m, units::ev_to_hartree(24.0));
  const Geometry g{Vec3(0.0, 0.0, -1.0), Vec3(0.0, 0.0, 1.0), Vec3(0.6, 0.0, 0.8), 3.0};
  EXPECT_THROW(f_partial_wave(m, kin, 0, g, 5), ConvergenceError);
}

}  // namespace
}  // namespace zrp::amplitude
