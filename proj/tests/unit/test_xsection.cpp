#include <cmath>

#include <gtest/gtest.h>

#include "frozen_values.hpp"
#include "generators.hpp"
#include "zrp/errors.hpp"
#include "zrp/molecule.hpp"
#include "zrp/numerics.hpp"
#include "zrp/oracle.hpp"
#include "zrp/units.hpp"
#include "zrp/xsection.hpp"

namespace zrp::xsection {
namespace {

using units::deg_to_rad;
using units::ev_to_hartree;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

molecule::MorseState ground() { return molecule::MorseState::ground(0.02, 5.74e-4, 0.7005); }

// Synthetic excited state whose v' = 0 level sits at the channel-1 threshold.
molecule::MorseState excited() {
  return molecule::MorseState::with_ground_level(0.012, 4e-4, 0.85, ev_to_hartree(11.87));
}

channels::ChannelModel flipped(const channels::ChannelModel& m) {
  Eigen::MatrixXd c = m.coupling_matrix();
  c(0, 1) = -c(0, 1);
  c(1, 0) = -c(1, 0);
  return channels::ChannelModel(m.alphas(), c, m.parity_products(), m.thresholds());
}

template <class Dcs>
double integrate_sphere(const Dcs& dcs, int order = 64) {
  const auto rule = numerics::gauss_rule(order, -1.0, 1.0);
  return 2.0 * units::kPi * rule.integrate([&](double c) { return dcs(std::acos(c)); });
}

TEST(PureElectronicTest, FrozenReferenceValues) {
  const auto m = test::h2_model();
  const PureElectronic calc(m, ground(), 0, ev_to_hartree(15.0), 1);
  for (int i = 0; i < 7; ++i) {
    EXPECT_LT(rel(calc.dcs(deg_to_rad(30.0 * i)), test::frozen::kDcs15[i]), 1e-10) << "angle=" << 30 * i;
  }
  EXPECT_LT(rel(calc.ics(), test::frozen::kIcs15), 1e-10);
  EXPECT_LT(rel(ics_pure(m, ground(), 0, ev_to_hartree(18.0), 1), test::frozen::kIcs18), 1e-10);
}

TEST(PureElectronicTest, IntegratedDcsEqualsIcs) {
  const auto m = test::h2_model();
  for (double e : {15.0, 18.0}) {
    const PureElectronic calc(m, ground(), 0, ev_to_hartree(e), 1);
    EXPECT_LT(rel(integrate_sphere([&](double a) { return calc.dcs(a); }), calc.ics()), 1e-6) << "E=" << e;
  }
}

TEST(PureElectronicTest, ThresholdGivesZero) {
  const auto m = test::h2_model();
  const PureElectronic calc(m, ground(), 0, m.threshold(1), 1);
  EXPECT_EQ(calc.k_out(), 0.0);
  EXPECT_EQ(calc.dcs(0.3), 0.0);
  EXPECT_EQ(calc.ics(), 0.0);
}

TEST(PureElectronicTest, ClosedChannelThrows) {
  const auto m = test::h2_model();
  EXPECT_THROW(PureElectronic(m, ground(), 0, ev_to_hartree(11.0), 1), ClosedChannelError);
}

TEST(PureElectronicTest, ElasticForwardIsFinite) {
  const auto m = test::h2_model();
  const double value = dcs_pure(m, ground(), 0, ev_to_hartree(15.0), 0, 0.0);
  EXPECT_TRUE(std::isfinite(value));
  EXPECT_GT(value, 0.0);
}

TEST(PureElectronicTest, SingleChannelMatchesTwoCentreReference) {
  const channels::ChannelModel m({0.35}, Eigen::MatrixXd::Zero(1, 1), {1}, {0.0});
  const auto s = ground();
  const double e = ev_to_hartree(6.0);
  const double k0 = std::sqrt(2.0 * e);
  const PureElectronic calc(m, s, 0, e, 0);
  const auto grid = molecule::reference_grid(s, 0);
  const molecule::VibHarmonic x(s, 0);
  for (double deg : {0.0, 35.0, 90.0, 151.0, 180.0}) {
    const double angle = deg_to_rad(deg);
    const double ref = grid.integrate(
        [&](double r) { return x(r) * x(r) * oracle::elastic_reference(0.35, k0, r, angle); });
    EXPECT_LT(rel(calc.dcs(angle), ref), 1e-12) << "angle=" << deg;
  }
  const double ref_ics =
      grid.integrate([&](double r) { return x(r) * x(r) * oracle::elastic_reference_ics(0.35, k0, r); });
  EXPECT_LT(rel(calc.ics(), ref_ics), 1e-12);
}

TEST(PureElectronicTest, NonNegative) {
  test::Rng rng(41);
  for (int s = 0; s < 20; ++s) {
    const auto m = test::model(rng, 3);
    const double e = test::uniform(rng, 0.05, 1.0);
    const auto kin = channels::kinematics(m, e);
    for (int n = 0; n < 3; ++n) {
      if (!kin.is_open(n)) continue;
      const PureElectronic calc(m, ground(), 0, e, n);
      EXPECT_GE(calc.ics(), 0.0);
      for (int i = 0; i <= 18; ++i) EXPECT_GE(calc.dcs(deg_to_rad(10.0 * i)), 0.0);
    }
  }
}

TEST(PureElectronicTest, CouplingSignInvariance) {
  for (double b : {1.35, 1.40, 1.45}) {
    const auto m = test::h2_model(b);
    const auto f = flipped(m);
    for (double e : {12.0, 15.0, 18.0, 24.0}) {
      const PureElectronic a(m, ground(), 0, ev_to_hartree(e), 1);
      const PureElectronic c(f, ground(), 0, ev_to_hartree(e), 1);
      EXPECT_EQ(a.ics(), c.ics());
      for (int i = 0; i <= 180; i += 5) EXPECT_EQ(a.dcs(deg_to_rad(i)), c.dcs(deg_to_rad(i)));
    }
  }
}

TEST(VibronicTest, MomentumAndClosure) {
  const auto s0 = ground();
  const auto s1 = excited();
  const double e = ev_to_hartree(15.0);
  const auto k = vibronic_momentum(s0, s1, 0, 0, e);
  ASSERT_TRUE(k.has_value());
  EXPECT_NEAR(*k, std::sqrt(2.0 * (e - ev_to_hartree(11.87))), 1e-14);
  EXPECT_FALSE(vibronic_momentum(s0, s1, 0, 0, ev_to_hartree(11.0)).has_value());
  EXPECT_THROW(Vibronic(test::h2_model(), s0, s1, 0, 0, ev_to_hartree(11.0), 1), ClosedChannelError);
}

TEST(VibronicTest, MatchesNestedQuadrature) {
  const auto m = test::h2_model();
  const auto s0 = ground();
  const auto s1 = excited();
  const double e = ev_to_hartree(15.0);
  const Vibronic calc(m, s0, s1, 0, 1, e, 1);
  for (double deg : {0.0, 40.0, 90.0, 135.0, 180.0}) {
    const double angle = deg_to_rad(deg);
    const double ref = oracle::angular_average_dcs_vib(m, s0, s1, 0, 1, e, 1, angle, 24);
    EXPECT_LT(rel(calc.dcs(angle), ref), 1e-5) << "angle=" << deg;
  }
}

TEST(VibronicTest, ElasticVibrationalMatchesNestedQuadrature) {
  const auto m = test::h2_model();
  const auto s0 = ground();
  const double e = ev_to_hartree(5.0);
  const Vibronic calc(m, s0, s0, 0, 1, e, 0);
  for (double deg : {10.0, 90.0, 170.0}) {
    const double angle = deg_to_rad(deg);
    const double ref = oracle::angular_average_dcs_vib(m, s0, s0, 0, 1, e, 0, angle, 24);
    EXPECT_LT(rel(calc.dcs(angle), ref), 1e-5) << "angle=" << deg;
  }
}

TEST(VibronicTest, OddParityMatchesNestedQuadrature) {
  const auto m = test::h2_model(1.40, 0.63, -1);
  const auto s0 = ground();
  const auto s1 = excited();
  const double e = ev_to_hartree(18.0);
  const Vibronic calc(m, s0, s1, 0, 2, e, 1);
  for (double deg : {0.0, 60.0, 120.0, 180.0}) {
    const double angle = deg_to_rad(deg);
    const double ref = oracle::angular_average_dcs_vib(m, s0, s1, 0, 2, e, 1, angle, 24);
    EXPECT_LT(rel(calc.dcs(angle), ref), 1e-5) << "angle=" << deg;
  }
}

TEST(VibronicTest, IcsEqualsIntegratedDcs) {
  for (int parity : {1, -1}) {
    const auto m = test::h2_model(1.40, 0.63, parity);
    const Vibronic calc(m, ground(), excited(), 0, 1, ev_to_hartree(16.0), 1);
    EXPECT_LT(rel(integrate_sphere([&](double a) { return calc.dcs(a); }), calc.ics()), 1e-4)
        << "parity=" << parity;
  }
}

TEST(VibronicTest, TruncationRobustness) {
  const auto m = test::h2_model();
  const double e = ev_to_hartree(18.0);
  const Vibronic adaptive(m, ground(), excited(), 0, 1, e, 1);
  for (double deg : {0.0, 90.0, 180.0}) {
    const auto series = adaptive.dcs_series(deg_to_rad(deg));
    Options doubled;
    doubled.l_max = 2 * series.l_max;
    const Vibronic wide(m, ground(), excited(), 0, 1, e, 1, doubled);
    EXPECT_LT(rel(wide.dcs(deg_to_rad(deg)), series.value), 1e-8) << "angle=" << deg;
  }
  const auto ics = adaptive.ics_series();
  Options doubled;
  doubled.l_max = 2 * ics.l_max;
  EXPECT_LT(rel(Vibronic(m, ground(), excited(), 0, 1, e, 1, doubled).ics(), ics.value), 1e-8);
}

TEST(VibronicTest, CouplingSignInvariance) {
  const auto m = test::h2_model();
  const auto f = flipped(m);
  const double e = ev_to_hartree(16.0);
  const Vibronic a(m, ground(), excited(), 0, 1, e, 1);
  const Vibronic c(f, ground(), excited(), 0, 1, e, 1);
  EXPECT_EQ(a.ics(), c.ics());
  for (int i = 0; i <= 180; i += 15) EXPECT_EQ(a.dcs(deg_to_rad(i)), c.dcs(deg_to_rad(i)));
}

TEST(VibronicTest, ThresholdAndNonNegativity) {
  const auto m = test::h2_model();
  const Vibronic at(m, ground(), excited(), 0, 0, ev_to_hartree(11.87), 1);
  EXPECT_EQ(at.ics(), 0.0);
  const Vibronic calc(m, ground(), excited(), 0, 3, ev_to_hartree(20.0), 1);
  EXPECT_GE(calc.ics(), 0.0);
  for (int i = 0; i <= 180; i += 10) EXPECT_GE(calc.dcs(deg_to_rad(i)), 0.0);
}

TEST(CurveKindTest, Names) {
  EXPECT_STREQ(to_string(CurveKind::dcs_pure), "dcs_pure");
  EXPECT_STREQ(to_string(CurveKind::ics_vib), "ics_vib");
}

}  // namespace
}  // namespace zrp::xsection
