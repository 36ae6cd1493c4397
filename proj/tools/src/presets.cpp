#include "zrp/cli/presets.hpp"

#include <fmt/format.h>

namespace zrp::cli {

namespace {

constexpr std::string_view kH2Yaml = R"yaml(# H2 X1Sg+ -> a3Sg+ two-channel model.
channels:
  # Scattering-length matrix (bohr). Diagonal: 1/alpha_0 = 1/0.35 and b.
  # Off-diagonal: c.
  scattering_length_matrix:
    - [2.857142857142857, 0.63]
    - [0.63, 1.40]
  parity_products: [1, 1]
  # a3Sg+ vertical threshold from H2 spectroscopy; not a fitted parameter.
  thresholds_eV: [0.0, 11.87]

morse:
  - name: X1Sg+
    omega: 2.0e-2      # hartree
    anharm: 5.74e-4    # hartree
    r_eq: 0.7005       # bohr, half the internuclear distance
    mu: 918.0764

numerics:
  radial_nodes: 256
  l_max_pad: 20
  tail_tol: 1.0e-10

output:
  units: bohr2
  angle_step_deg: 1.0
  energy_grid_eV: [12.0, 24.0, 0.1]
)yaml";

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> table = {
      {"fig2a", "X->a pure electronic DCS at 15 eV, b = 1.35, 1.40, 1.45", {1.35, 1.40, 1.45},
       15.0, std::nullopt},
      {"fig2b", "X->a pure electronic DCS at 18 eV, b = 1.35, 1.40, 1.45", {1.35, 1.40, 1.45},
       18.0, std::nullopt},
      {"fig3", "X->a pure electronic ICS on 12-24 eV, b = 1.40, c = 0.63", {1.40}, std::nullopt,
       std::array<double, 3>{12.0, 24.0, 0.1}},
  };
  return table;
}

const Preset& find_preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  std::string known;
  for (const auto& p : presets()) known += (known.empty() ? "" : ", ") + p.name;
  throw ConfigError(fmt::format("--preset: unknown preset '{}' (known: {})", name, known));
}

std::string_view h2_config_yaml() { return kH2Yaml; }

RunConfig h2_config() { return parse_config(kH2Yaml); }

RunConfig with_b(RunConfig config, double b) {
  if (config.scattering_length.rows() < 2) {
    throw ConfigError("channels.scattering_length_matrix: preset needs at least two channels");
  }
  config.scattering_length(1, 1) = b;
  validate(config);
  return config;
}

}  // namespace zrp::cli
