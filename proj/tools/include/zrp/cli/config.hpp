#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "zrp/channels.hpp"
#include "zrp/errors.hpp"
#include "zrp/molecule.hpp"
#include "zrp/xsection.hpp"

namespace zrp::cli {

/// Invalid or incomplete run configuration. The message names the field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class Units { bohr2, cm2e16 };

Units parse_units(std::string_view text);
std::string_view to_string(Units units);

struct MorseConfig {
  std::string name;
  double omega = 0.0;   // hartree
  double anharm = 0.0;  // hartree
  double r_eq = 0.0;    // bohr, half the internuclear distance
  std::optional<double> u_offset;  // hartree; defaulted from the threshold when absent
  double mu = molecule::kH2ReducedMass;
};

struct NumericsConfig {
  int radial_nodes = molecule::kDefaultRadialNodes;
  int l_max_pad = 20;
  double tail_tol = 1e-10;
};

struct OutputConfig {
  Units units = Units::bohr2;
  double angle_step_deg = 1.0;
  std::array<double, 3> energy_grid_eV = {12.0, 24.0, 0.1};  // lo, hi, step
};

/// Everything a run needs. Energies are in eV and lengths in bohr at this
/// boundary; conversion to hartree happens in the accessors.
struct RunConfig {
  Eigen::MatrixXd scattering_length;  // bohr
  std::vector<int> parity_products;
  std::vector<double> thresholds_eV;
  std::vector<MorseConfig> morse;
  NumericsConfig numerics;
  OutputConfig output;

  channels::ChannelModel channel_model() const;
  /// Morse term of electronic state n. When u_offset is absent, state 0 is
  /// pinned so that E_00 = 0 and state n so that E_n0 equals its threshold.
  molecule::MorseState morse_state(int n) const;
  bool has_morse_state(int n) const;
  xsection::Options xsection_options() const;

  /// Stable text rendering used for hashing.
  std::string canonical() const;
  /// SHA-256 of canonical(), lowercase hex.
  std::string hash() const;
};

/// Throws ConfigError on the first violated constraint.
void validate(const RunConfig& config);

RunConfig parse_config(std::string_view yaml_text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace zrp::cli
