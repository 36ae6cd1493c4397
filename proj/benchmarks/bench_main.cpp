#include <vector>

#include <benchmark/benchmark.h>

#include "zrp/channels.hpp"
#include "zrp/molecule.hpp"
#include "zrp/numerics.hpp"
#include "zrp/units.hpp"
#include "zrp/xsection.hpp"

namespace {

using namespace zrp;

channels::ChannelModel h2_model() {
  Eigen::MatrixXd s(2, 2);
  s << 1.0 / 0.35, 0.63, 0.63, 1.40;
  return channels::ChannelModel::from_scattering_length_matrix(s, {1, 1}, {0.0, units::ev_to_hartree(11.87)});
}

molecule::MorseState ground() { return molecule::MorseState::ground(0.02, 5.74e-4, 0.7005); }

void BM_BesselSequence(benchmark::State& state) {
  std::vector<double> out(static_cast<std::size_t>(state.range(0)) + 1);
  for (auto _ : state) {
    numerics::sph_bessel_j_sequence(3.7, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_BesselSequence)->Arg(20)->Arg(60);

void BM_OmegaSolve(benchmark::State& state) {
  const auto m = h2_model();
  const auto kin = channels::kinematics(m, units::ev_to_hartree(15.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(channels::omega(m, kin, channels::Sign::plus, 0.7005));
  }
}
BENCHMARK(BM_OmegaSolve);

void BM_DcsPureCurve(benchmark::State& state) {
  const auto m = h2_model();
  const auto s0 = ground();
  for (auto _ : state) {
    const xsection::PureElectronic calc(m, s0, 0, units::ev_to_hartree(15.0), 1);
    double sum = 0.0;
    for (int deg = 0; deg <= 180; ++deg) sum += calc.dcs(units::deg_to_rad(deg));
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_DcsPureCurve)->Unit(benchmark::kMillisecond);

void BM_IcsVib(benchmark::State& state) {
  const auto m = h2_model();
  const auto s0 = ground();
  const auto s1 = molecule::MorseState::with_ground_level(0.012, 4e-4, 0.85, units::ev_to_hartree(11.87));
  for (auto _ : state) {
    benchmark::DoNotOptimize(xsection::ics_vib(m, s0, s1, 0, 1, units::ev_to_hartree(16.0), 1));
  }
}
BENCHMARK(BM_IcsVib)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
