#include "zrp/cli/app.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "zrp/cli/config.hpp"
#include "zrp/cli/csv.hpp"
#include "zrp/cli/presets.hpp"
#include "zrp/cli/runner.hpp"
#include "zrp/errors.hpp"

namespace zrp::cli {

namespace {

namespace fs = std::filesystem;

struct CommonArgs {
  std::string config_path;
  std::string preset;
  std::string out;
  std::string units;
};

struct CurveArgs {
  std::optional<double> energy;
  std::optional<double> e_lo;
  std::optional<double> e_hi;
  std::optional<double> step;
  std::optional<double> angle_step;
  int channel = 1;
  int v = 0;
  std::optional<int> v_prime;
};

struct VibArgs {
  int state = 0;
  std::string v_list;
  int samples = 0;
  std::string wf_out;
};

int to_int(const std::string& text, const std::string& field) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw ConfigError(fmt::format("{}: '{}' is not an integer", field, text));
  }
}

RunConfig resolve_config(const CommonArgs& args) {
  if (!args.config_path.empty()) return load_config(args.config_path);
  if (!args.preset.empty()) return h2_config();
  throw ConfigError("--config: required unless --preset is given");
}

const Preset* resolve_preset(const CommonArgs& args) {
  return args.preset.empty() ? nullptr : &find_preset(args.preset);
}

Units resolve_units(const CommonArgs& args, const RunConfig& config) {
  return args.units.empty() ? config.output.units : parse_units(args.units);
}

void open_for_write(std::ofstream& file, const fs::path& path) {
  file.open(path, std::ios::binary);
  if (!file) throw ConfigError("--out: cannot write '" + path.string() + "'");
}

// One run per b value when the preset sweeps b; otherwise a single run.
std::vector<std::pair<std::string, RunConfig>> expand(const RunConfig& base, const Preset* preset) {
  if (!preset) return {{"", base}};
  std::vector<std::pair<std::string, RunConfig>> runs;
  for (double b : preset->b_values) {
    runs.emplace_back(preset->b_values.size() > 1 ? fmt::format("_b{:.2f}", b) : "", with_b(base, b));
  }
  return runs;
}

fs::path output_path(const CommonArgs& args, const std::string& suffix) {
  if (!args.out.empty()) {
    const fs::path out(args.out);
    if (suffix.empty()) return out;
    return out.parent_path() / (out.stem().string() + suffix + out.extension().string());
  }
  return fs::path(args.preset + suffix + ".csv");
}

template <class Writer>
void emit(std::ostream& out, const CommonArgs& args, const std::string& suffix, bool multiple,
          const Writer& write) {
  if (args.out.empty() && !multiple) {
    write(out);
    return;
  }
  const fs::path path = output_path(args, suffix);
  std::ofstream file;
  open_for_write(file, path);
  write(file);
  if (!file) throw ConfigError("--out: write to '" + path.string() + "' failed");
}

int cmd_dcs(const CommonArgs& common, const CurveArgs& a, std::ostream& out) {
  const RunConfig base = resolve_config(common);
  const Preset* preset = resolve_preset(common);
  DcsRequest req;
  if (a.energy) {
    req.e_in_eV = *a.energy;
  } else if (preset && preset->energy_eV) {
    req.e_in_eV = *preset->energy_eV;
  } else {
    throw ConfigError("--energy: required for dcs");
  }
  req.channel = a.channel;
  req.v = a.v;
  req.v_prime = a.v_prime;
  req.angle_step_deg = a.angle_step;
  const auto runs = expand(base, preset);
  for (const auto& [suffix, config] : runs) {
    const auto curve = run_dcs(config, req);
    const Units units = resolve_units(common, config);
    emit(out, common, suffix, runs.size() > 1,
         [&](std::ostream& os) { write_curve_csv(os, curve, config, units); });
  }
  return kExitOk;
}

int cmd_ics(const CommonArgs& common, const CurveArgs& a, std::ostream& out) {
  const RunConfig base = resolve_config(common);
  const Preset* preset = resolve_preset(common);
  auto grid = base.output.energy_grid_eV;
  if (preset && preset->energy_grid_eV) grid = *preset->energy_grid_eV;
  IcsRequest req;
  req.e_lo_eV = a.e_lo.value_or(grid[0]);
  req.e_hi_eV = a.e_hi.value_or(grid[1]);
  req.step_eV = a.step.value_or(grid[2]);
  req.channel = a.channel;
  req.v = a.v;
  req.v_prime = a.v_prime;
  const auto runs = expand(base, preset);
  for (const auto& [suffix, config] : runs) {
    const auto curve = run_ics(config, req);
    const Units units = resolve_units(common, config);
    emit(out, common, suffix, runs.size() > 1,
         [&](std::ostream& os) { write_curve_csv(os, curve, config, units); });
  }
  return kExitOk;
}

int cmd_vib(const CommonArgs& common, const VibArgs& a, std::ostream& out) {
  const RunConfig config = resolve_config(common);
  VibRequest req;
  req.state = a.state;
  if (!a.v_list.empty()) req.v_list = parse_level_list(a.v_list);
  req.samples = a.samples;
  if (!a.wf_out.empty() && req.samples == 0) req.samples = 201;
  const auto table = run_vib(config, req);
  emit(out, common, "", false, [&](std::ostream& os) { write_vib_csv(os, table, config); });
  if (!a.wf_out.empty()) {
    std::ofstream file;
    open_for_write(file, a.wf_out);
    write_wavefunction_csv(file, table, config);
  }
  return kExitOk;
}

int cmd_validate(const CommonArgs& common, bool json, std::ostream& out) {
  const RunConfig config = resolve_config(common);
  const auto report = run_validate(config);
  if (json) {
    out << validation_json(report, config) << "\n";
  } else {
    write_validation_text(out, report);
  }
  if (!common.out.empty()) {
    std::ofstream file;
    open_for_write(file, common.out);
    file << validation_json(report, config) << "\n";
  }
  return report.passed() ? kExitOk : kExitValidationFailed;
}

void add_common(CLI::App* cmd, CommonArgs& common) {
  cmd->add_option("--config", common.config_path, "YAML run configuration");
  cmd->add_option("--preset", common.preset, "fig2a | fig2b | fig3");
  cmd->add_option("--out", common.out, "output file (default: stdout)");
  cmd->add_option("--units", common.units, "bohr2 | cm2e-16");
}

void add_transition(CLI::App* cmd, CurveArgs& a) {
  cmd->add_option("--channel", a.channel, "final electronic channel n")->capture_default_str();
  cmd->add_option("--v", a.v, "initial vibrational level")->capture_default_str();
  cmd->add_option("--vprime", a.v_prime, "final vibrational level (electron-vibrational cross section)");
}

}  // namespace

std::vector<int> parse_level_list(const std::string& text) {
  std::vector<int> levels;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) throw ConfigError("--v-list: empty entry in '" + text + "'");
    const auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      levels.push_back(to_int(item, "--v-list"));
      continue;
    }
    const int lo = to_int(item.substr(0, dash), "--v-list");
    const int hi = to_int(item.substr(dash + 1), "--v-list");
    if (hi < lo) throw ConfigError("--v-list: descending range '" + item + "'");
    for (int v = lo; v <= hi; ++v) levels.push_back(v);
  }
  if (levels.empty()) throw ConfigError("--v-list: no levels given");
  return levels;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multichannel zero-range-potential electron-diatomic scattering"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "zrp 0.1.0");

  CommonArgs common;
  CurveArgs curve;
  VibArgs vib;
  bool json = false;

  auto* dcs = app.add_subcommand("dcs", "differential cross section vs angle");
  add_common(dcs, common);
  add_transition(dcs, curve);
  dcs->add_option("--energy", curve.energy, "incident energy (eV)");
  dcs->add_option("--angle-step", curve.angle_step, "angle step (deg), overrides the config");

  auto* ics = app.add_subcommand("ics", "integral cross section vs energy");
  add_common(ics, common);
  add_transition(ics, curve);
  ics->add_option("--e-lo", curve.e_lo, "first energy (eV)");
  ics->add_option("--e-hi", curve.e_hi, "last energy (eV)");
  ics->add_option("--step", curve.step, "energy step (eV)");

  auto* vibc = app.add_subcommand("vib", "vibrational levels and wavefunctions");
  add_common(vibc, common);
  vibc->add_option("--state", vib.state, "electronic state index")->capture_default_str();
  vibc->add_option("--v-list", vib.v_list, "levels, e.g. 0-16 or 0,1,5 (default: all)");
  vibc->add_option("--samples", vib.samples, "wavefunction samples per level");
  vibc->add_option("--wf-out", vib.wf_out, "write sampled wavefunctions v,R,X to this file");

  auto* val = app.add_subcommand("validate", "run the oracle validation suite");
  add_common(val, common);
  val->add_flag("--json", json, "print the machine-readable summary instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (*dcs) return cmd_dcs(common, curve, out);
    if (*ics) return cmd_ics(common, curve, out);
    if (*vibc) return cmd_vib(common, vib, out);
    return cmd_validate(common, json, out);
  } catch (const ConfigError& e) {
    err << "zrp: config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const ClosedChannelError& e) {
    err << "zrp: " << e.what() << "\n";
    return kExitKinematicsError;
  } catch (const Error& e) {
    err << "zrp: " << e.what() << "\n";
    return kExitNumericalError;
  }
}

}  // namespace zrp::cli
