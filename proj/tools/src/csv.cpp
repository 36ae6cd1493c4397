#include "zrp/cli/csv.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include "zrp/units.hpp"

namespace zrp::cli {

namespace {

double unit_factor(Units units) { return units == Units::cm2e16 ? units::kBohr2In1e16Cm2 : 1.0; }

std::string area_unit(Units units) { return units == Units::cm2e16 ? "1e-16 cm^2" : "bohr^2"; }

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
  }
  return "?";
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) return "0";
  return fmt::format("{:.12g}", x);
}

void write_header(std::ostream& os, const RunConfig& config, Units units) {
  os << "# zrp-multichannel\n";
  os << "# config-sha256: " << config.hash() << "\n";
  os << "# units: " << to_string(units) << "\n";
}

void write_curve_csv(std::ostream& os, const xsection::CrossSectionCurve& curve,
                     const RunConfig& config, Units units) {
  write_header(os, config, units);
  const bool is_dcs =
      curve.kind == xsection::CurveKind::dcs_pure || curve.kind == xsection::CurveKind::dcs_vib;
  os << "# curve: " << xsection::to_string(curve.kind) << " channel=" << curve.meta.channel
     << " v=" << curve.meta.v;
  if (curve.meta.v_prime) os << " v'=" << *curve.meta.v_prime;
  if (!curve.meta.parameters.empty()) os << " " << curve.meta.parameters;
  os << "\n";
  os << "# value unit: " << area_unit(units) << (is_dcs ? "/sr" : "") << "\n";

  const double scale = unit_factor(units);
  os << (is_dcs ? "angle_deg,dcs\n" : "energy_eV,ics,closed\n");
  for (std::size_t i = 0; i < curve.abscissa.size(); ++i) {
    os << format_number(curve.abscissa[i]) << "," << format_number(curve.values[i] * scale);
    if (!is_dcs) os << "," << (curve.below_threshold[i] ? 1 : 0);
    os << "\n";
  }
}

void write_vib_csv(std::ostream& os, const VibTable& table, const RunConfig& config) {
  write_header(os, config, config.output.units);
  os << "# levels: state=" << table.state << " v_max=" << table.v_max << "\n";
  os << "v,E_hartree\n";
  for (const auto& level : table.levels) os << level.v << "," << format_number(level.energy) << "\n";
}

void write_wavefunction_csv(std::ostream& os, const VibTable& table, const RunConfig& config) {
  write_header(os, config, config.output.units);
  os << "# wavefunctions: state=" << table.state << " R in bohr, X in bohr^-1/2\n";
  os << "v,R,X\n";
  for (const auto& level : table.levels) {
    for (std::size_t i = 0; i < level.r.size(); ++i) {
      os << level.v << "," << format_number(level.r[i]) << "," << format_number(level.x[i]) << "\n";
    }
  }
}

void write_validation_text(std::ostream& os, const ValidationReport& report) {
  for (const auto& c : report.checks) {
    os << fmt::format("{} {:<28} deviation={:.3e} tolerance={:.1e}", status_name(c.status), c.name,
                      c.deviation, c.tolerance);
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  os << (report.passed() ? "validation passed\n" : "validation FAILED\n");
}

std::string validation_json(const ValidationReport& report, const RunConfig& config) {
  nlohmann::json doc;
  doc["tool"] = "zrp-multichannel";
  doc["config_sha256"] = config.hash();
  doc["passed"] = report.passed();
  doc["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    doc["checks"].push_back({{"name", c.name},
                             {"status", status_name(c.status)},
                             {"deviation", c.deviation},
                             {"tolerance", c.tolerance},
                             {"note", c.note}});
  }
  return doc.dump();
}

}  // namespace zrp::cli
