#include "zrp/cli/runner.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "zrp/amplitude.hpp"
#include "zrp/molecule.hpp"
#include "zrp/numerics.hpp"
#include "zrp/oracle.hpp"
#include "zrp/units.hpp"

namespace zrp::cli {

namespace {

using amplitude::Vec3;
using channels::Complex;

void check_channel(const RunConfig& config, int n) {
  const int size = static_cast<int>(config.scattering_length.rows());
  if (n < 0 || n >= size) {
    throw ConfigError(fmt::format("--channel: {} out of range (model has channels 0..{})", n, size - 1));
  }
}

void check_level(const molecule::MorseState& s, int v, const char* field, int state) {
  const int vmax = molecule::v_max(s);
  if (v < 0 || v > vmax) {
    throw ConfigError(
        fmt::format("{}: v={} outside 0..v_max={} for electronic state {}", field, v, vmax, state));
  }
}

[[noreturn]] void throw_closed(int n, double e_in_eV) {
  throw ClosedChannelError(fmt::format("channel {} closed at E={} eV", n, e_in_eV), n,
                           units::ev_to_hartree(e_in_eV));
}

std::string describe(const RunConfig& config, double e_in_eV) {
  const auto& S = config.scattering_length;
  std::string text = fmt::format("e_in_eV={}", e_in_eV);
  if (S.rows() >= 2) text += fmt::format(" b={} c={}", S(1, 1), S(0, 1));
  return text;
}

struct Transition {
  channels::ChannelModel model;
  molecule::MorseState morse0;
  std::optional<molecule::MorseState> morse_n;
};

Transition prepare(const RunConfig& config, int n, int v, std::optional<int> v_prime) {
  check_channel(config, n);
  Transition t{config.channel_model(), config.morse_state(0), std::nullopt};
  check_level(t.morse0, v, "--v", 0);
  if (v_prime) {
    t.morse_n = config.morse_state(n);
    check_level(*t.morse_n, *v_prime, "--vprime", n);
  }
  return t;
}

bool relation_closed(const Transition& t, int n, int v, std::optional<int> v_prime, double e_in) {
  if (v_prime) return !xsection::vibronic_momentum(t.morse0, *t.morse_n, v, *v_prime, e_in);
  return !channels::kinematics(t.model, e_in).is_open(n);
}

double rel_dev(Complex a, Complex b) {
  const double scale = std::abs(b);
  return scale > 0.0 ? std::abs(a - b) / scale : std::abs(a - b);
}

double rel_dev(double a, double b) {
  const double scale = std::abs(b);
  return scale > 0.0 ? std::abs(a - b) / scale : std::abs(a - b);
}

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    const Vec3 u(normal(rng), normal(rng), normal(rng));
    const double len = u.norm();
    if (len > 1e-6) return u / len;
  }
}

ValidationCheck finish(std::string name, double deviation, double tolerance, std::string note = {}) {
  ValidationCheck check{std::move(name), deviation, tolerance, CheckStatus::pass, std::move(note)};
  if (!(deviation <= tolerance)) check.status = CheckStatus::fail;
  return check;
}

ValidationCheck skipped(std::string name, double tolerance, std::string note) {
  return {std::move(name), 0.0, tolerance, CheckStatus::skip, std::move(note)};
}

// Integral of a DCS over the sphere: 2 pi times Gauss-Legendre in cos(theta).
template <class Dcs>
double integrate_dcs(const Dcs& dcs, int order) {
  const auto rule = numerics::gauss_rule(order, -1.0, 1.0);
  return 2.0 * units::kPi * rule.integrate([&](double c) { return dcs(std::acos(c)); });
}

}  // namespace

std::vector<double> angle_grid_deg(double step) {
  if (!(step > 0.0)) throw ConfigError("angle_step_deg: must be > 0");
  const int count = static_cast<int>(std::floor(180.0 / step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) grid.push_back(i * step);
  return grid;
}

std::vector<double> energy_grid(double lo, double hi, double step) {
  if (!(lo > 0.0)) throw ConfigError("energy grid: lower bound must be > 0");
  if (!(hi >= lo)) throw ConfigError("energy grid: need e_lo <= e_hi");
  if (!(step > 0.0)) throw ConfigError("energy grid: step must be > 0");
  const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) grid.push_back(lo + i * step);
  return grid;
}

xsection::CrossSectionCurve run_dcs(const RunConfig& config, const DcsRequest& req) {
  const int n = req.channel;
  const auto t = prepare(config, n, req.v, req.v_prime);
  if (!(req.e_in_eV > 0.0)) throw ConfigError("--energy: must be > 0");
  const double e_in = units::ev_to_hartree(req.e_in_eV);
  if (relation_closed(t, n, req.v, req.v_prime, e_in)) throw_closed(n, req.e_in_eV);

  xsection::CrossSectionCurve curve;
  curve.abscissa = angle_grid_deg(req.angle_step_deg.value_or(config.output.angle_step_deg));
  curve.below_threshold.assign(curve.abscissa.size(), false);
  curve.meta = {n, req.v, req.v_prime, describe(config, req.e_in_eV)};
  const auto opts = config.xsection_options();

  if (req.v_prime) {
    curve.kind = xsection::CurveKind::dcs_vib;
    const xsection::Vibronic calc(t.model, t.morse0, *t.morse_n, req.v, *req.v_prime, e_in, n, opts);
    for (double a : curve.abscissa) curve.values.push_back(calc.dcs(units::deg_to_rad(a)));
  } else {
    curve.kind = xsection::CurveKind::dcs_pure;
    const xsection::PureElectronic calc(t.model, t.morse0, req.v, e_in, n, opts);
    for (double a : curve.abscissa) curve.values.push_back(calc.dcs(units::deg_to_rad(a)));
  }
  return curve;
}

xsection::CrossSectionCurve run_ics(const RunConfig& config, const IcsRequest& req) {
  const int n = req.channel;
  const auto t = prepare(config, n, req.v, req.v_prime);

  xsection::CrossSectionCurve curve;
  curve.kind = req.v_prime ? xsection::CurveKind::ics_vib : xsection::CurveKind::ics_pure;
  curve.abscissa = energy_grid(req.e_lo_eV, req.e_hi_eV, req.step_eV);
  curve.meta = {n, req.v, req.v_prime, describe(config, req.e_lo_eV)};
  curve.meta.parameters = fmt::format("e_lo_eV={} e_hi_eV={} step_eV={}", req.e_lo_eV,
                                      req.e_hi_eV, req.step_eV);
  const auto opts = config.xsection_options();

  for (double e_eV : curve.abscissa) {
    const double e_in = units::ev_to_hartree(e_eV);
    if (relation_closed(t, n, req.v, req.v_prime, e_in)) {
      curve.values.push_back(0.0);
      curve.below_threshold.push_back(true);
      continue;
    }
    double value = 0.0;
    if (req.v_prime) {
      value = xsection::ics_vib(t.model, t.morse0, *t.morse_n, req.v, *req.v_prime, e_in, n, opts);
    } else {
      value = xsection::ics_pure(t.model, t.morse0, req.v, e_in, n, opts);
    }
    curve.values.push_back(value);
    curve.below_threshold.push_back(false);
  }
  return curve;
}

VibTable run_vib(const RunConfig& config, const VibRequest& req) {
  const auto state = config.morse_state(req.state);
  VibTable table;
  table.state = req.state;
  table.v_max = molecule::v_max(state);
  std::vector<int> levels = req.v_list;
  if (levels.empty()) {
    for (int v = 0; v <= table.v_max; ++v) levels.push_back(v);
  }
  for (int v : levels) check_level(state, v, "--v-list", req.state);
  if (req.samples < 0) throw ConfigError("--samples: must be >= 0");

  for (int v : levels) {
    VibLevel level;
    level.v = v;
    level.energy = molecule::energy_level(state, v);
    if (req.samples > 0) {
      const molecule::VibHarmonic x(state, v);
      const auto [lo, hi] = molecule::reference_interval(state, v);
      for (int i = 0; i < req.samples; ++i) {
        const double r =
            req.samples == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (req.samples - 1);
        level.r.push_back(r);
        level.x.push_back(x(r));
      }
    }
    table.levels.push_back(std::move(level));
  }
  return table;
}

bool ValidationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const ValidationCheck& c) { return c.status == CheckStatus::fail; });
}

ValidationReport run_validate(const RunConfig& config) {
  ValidationReport report;
  const auto model = config.channel_model();
  const auto morse0 = config.morse_state(0);
  const auto opts = config.xsection_options();
  const int n = model.size() > 1 ? 1 : 0;
  const double thr_eV = units::hartree_to_ev(model.threshold(n));
  const double e_eV = thr_eV + 0.5 < 15.0 ? 15.0 : thr_eV + 3.0;
  const double e_in = units::ev_to_hartree(e_eV);
  const auto kin = channels::kinematics(model, e_in);
  const auto [r_lo, r_hi] = molecule::reference_interval(morse0, 0);
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  {
    double worst = 0.0;
    double max_threshold = 0.0;
    for (double t : model.thresholds()) max_threshold = std::max(max_threshold, t);
    for (int s = 0; s < 100; ++s) {
      const double e = units::ev_to_hartree(1.0) + unit(rng) * (max_threshold + units::ev_to_hartree(20.0));
      const auto k = channels::kinematics(model, e);
      const amplitude::Geometry g{random_unit(rng), random_unit(rng), random_unit(rng),
                                  r_lo + (r_hi - r_lo) * unit(rng)};
      for (int m = 0; m < model.size(); ++m) {
        if (!k.is_open(m)) continue;
        worst = std::max(worst, rel_dev(oracle::direct_bc_amplitude(model, k, m, g),
                                        amplitude::f_fixed_nuclei(model, k, m, g)));
      }
    }
    report.checks.push_back(finish("amplitude_direct_bc", worst, 1e-10, "100 random geometries"));
  }

  {
    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
      const amplitude::Geometry g{random_unit(rng), Vec3(0.0, 0.0, 1.0), random_unit(rng),
                                  r_lo + (r_hi - r_lo) * unit(rng)};
      for (int m = 0; m < model.size(); ++m) {
        if (!kin.is_open(m)) continue;
        worst = std::max(worst, rel_dev(amplitude::f_partial_wave(model, kin, m, g),
                                        amplitude::f_fixed_nuclei(model, kin, m, g)));
      }
    }
    report.checks.push_back(
        finish("partial_wave_identity", worst, 1e-10, fmt::format("20 geometries at {} eV", e_eV)));
  }

  const xsection::PureElectronic pure(model, morse0, 0, e_in, n, opts);
  {
    double worst = 0.0;
    for (int i = 0; i <= 18; ++i) {
      const double angle = units::deg_to_rad(10.0 * i);
      worst = std::max(worst, rel_dev(oracle::angular_average_dcs(model, morse0, 0, e_in, n, angle, 32, opts),
                                      pure.dcs(angle)));
    }
    report.checks.push_back(
        finish("orientation_average", worst, 1e-6, fmt::format("19 angles, channel {}, {} eV", n, e_eV)));
  }

  {
    const double integrated = integrate_dcs([&](double a) { return pure.dcs(a); }, 64);
    report.checks.push_back(finish("ics_pure_vs_integrated_dcs", rel_dev(integrated, pure.ics()), 1e-6,
                                   fmt::format("channel {}, {} eV", n, e_eV)));
  }

  if (config.has_morse_state(n)) {
    const auto morse_n = config.morse_state(n);
    if (xsection::vibronic_momentum(morse0, morse_n, 0, 0, e_in)) {
      const xsection::Vibronic vib(model, morse0, morse_n, 0, 0, e_in, n, opts);
      const double integrated = integrate_dcs([&](double a) { return vib.dcs(a); }, 64);
      report.checks.push_back(finish("ics_vib_vs_integrated_dcs", rel_dev(integrated, vib.ics()), 1e-4,
                                     fmt::format("(n,v')=({},0) <- (0,0), {} eV", n, e_eV)));
    } else {
      report.checks.push_back(skipped("ics_vib_vs_integrated_dcs", 1e-4, "transition closed"));
    }
  } else {
    report.checks.push_back(skipped("ics_vib_vs_integrated_dcs", 1e-4,
                                    fmt::format("no Morse parameters for state {}", n)));
  }

  {
    const int top = std::min(5, molecule::v_max(morse0));
    const auto grid = molecule::reference_grid(morse0, top, opts.radial_nodes);
    std::vector<molecule::VibHarmonic> x;
    for (int v = 0; v <= top; ++v) x.emplace_back(morse0, v);
    double worst = 0.0;
    for (int v = 0; v <= top; ++v) {
      for (int w = v; w <= top; ++w) {
        const double overlap = grid.integrate([&](double r) { return x[v](r) * x[w](r); });
        worst = std::max(worst, std::abs(overlap - (v == w ? 1.0 : 0.0)));
      }
    }
    report.checks.push_back(finish("orthonormality", worst, 1e-8, fmt::format("v, v' <= {}", top)));
  }

  {
    // sigma-similarity flipping every coupling of channel n.
    RunConfig flipped = config;
    for (Eigen::Index m = 0; m < flipped.scattering_length.rows(); ++m) {
      if (m == n) continue;
      flipped.scattering_length(n, m) = -flipped.scattering_length(n, m);
      flipped.scattering_length(m, n) = -flipped.scattering_length(m, n);
    }
    const xsection::PureElectronic other(flipped.channel_model(), morse0, 0, e_in, n, opts);
    double worst = std::abs(other.ics() - pure.ics());
    for (int i = 0; i <= 18; ++i) {
      const double angle = units::deg_to_rad(10.0 * i);
      worst = std::max(worst, std::abs(other.dcs(angle) - pure.dcs(angle)));
    }
    report.checks.push_back(finish("coupling_sign_invariance", worst, 0.0, "bit-identical DCS and ICS"));
  }
  return report;
}

}  // namespace zrp::cli
