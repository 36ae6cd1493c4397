#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "zrp/cli/config.hpp"
#include "zrp/cli/runner.hpp"
#include "zrp/xsection.hpp"

namespace zrp::cli {

/// 12 significant digits, shortest form.
std::string format_number(double x);

/// Common comment block: tool tag, config hash, unit system.
void write_header(std::ostream& os, const RunConfig& config, Units units);

void write_curve_csv(std::ostream& os, const xsection::CrossSectionCurve& curve,
                     const RunConfig& config, Units units);
void write_vib_csv(std::ostream& os, const VibTable& table, const RunConfig& config);
/// Long format `v,R,X` of the sampled wavefunctions.
void write_wavefunction_csv(std::ostream& os, const VibTable& table, const RunConfig& config);

void write_validation_text(std::ostream& os, const ValidationReport& report);
std::string validation_json(const ValidationReport& report, const RunConfig& config);

}  // namespace zrp::cli
