#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zrp/cli/config.hpp"
#include "zrp/xsection.hpp"

namespace zrp::cli {

struct DcsRequest {
  double e_in_eV = 15.0;
  int channel = 1;
  int v = 0;
  std::optional<int> v_prime;
  std::optional<double> angle_step_deg;  // overrides output.angle_step_deg
};

struct IcsRequest {
  double e_lo_eV = 12.0;
  double e_hi_eV = 24.0;
  double step_eV = 0.1;
  int channel = 1;
  int v = 0;
  std::optional<int> v_prime;
};

struct VibRequest {
  int state = 0;
  std::vector<int> v_list;  // empty: 0..v_max
  int samples = 0;          // wavefunction samples per level
};

struct VibLevel {
  int v = 0;
  double energy = 0.0;  // hartree
  std::vector<double> r;
  std::vector<double> x;
};

struct VibTable {
  int state = 0;
  int v_max = 0;
  std::vector<VibLevel> levels;
};

/// 0, step, 2 step, ... up to 180 degrees inclusive.
std::vector<double> angle_grid_deg(double step);
/// lo, lo + step, ... up to hi inclusive. lo == hi or step > hi - lo gives {lo}.
std::vector<double> energy_grid(double lo, double hi, double step);

/// Throws ConfigError on bad requests and ClosedChannelError when the
/// channel is closed at e_in.
xsection::CrossSectionCurve run_dcs(const RunConfig& config, const DcsRequest& request);
/// Sub-threshold points carry value 0 and below_threshold = true.
xsection::CrossSectionCurve run_ics(const RunConfig& config, const IcsRequest& request);
VibTable run_vib(const RunConfig& config, const VibRequest& request);

enum class CheckStatus { pass, fail, skip };

struct ValidationCheck {
  std::string name;
  double deviation = 0.0;  // max relative deviation (absolute for bit-identity checks)
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::skip;
  std::string note;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool passed() const;
};

ValidationReport run_validate(const RunConfig& config);

}  // namespace zrp::cli
