#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zrp/cli/config.hpp"

namespace zrp::cli {

struct Preset {
  std::string name;
  std::string description;
  /// Values of the channel-1 scattering length swept by the preset; one
  /// curve per entry.
  std::vector<double> b_values;
  std::optional<double> energy_eV;                     // DCS presets
  std::optional<std::array<double, 3>> energy_grid_eV;  // ICS presets
};

const std::vector<Preset>& presets();
/// Throws ConfigError for an unknown name.
const Preset& find_preset(std::string_view name);

/// Built-in H2 configuration, same content as configs/h2_x_to_a.yaml.
std::string_view h2_config_yaml();
RunConfig h2_config();

/// Copy of `config` with S(1,1) = b.
RunConfig with_b(RunConfig config, double b);

}  // namespace zrp::cli
