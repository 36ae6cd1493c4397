#include "zrp/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <openssl/evp.h>
#include <yaml-cpp/yaml.h>

#include "zrp/units.hpp"

namespace zrp::cli {

namespace {

template <class T>
T read_scalar(const YAML::Node& node, const std::string& field) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(field + ": expected a " +
                      (std::is_integral_v<T> ? std::string("integer") : std::string("number")));
  }
}

template <class T>
std::vector<T> read_list(const YAML::Node& node, const std::string& field) {
  if (!node || !node.IsSequence()) throw ConfigError(field + ": expected a list");
  std::vector<T> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(read_scalar<T>(node[i], fmt::format("{}[{}]", field, i)));
  }
  return out;
}

YAML::Node require(const YAML::Node& parent, const char* key, const std::string& path) {
  const YAML::Node node = parent[key];
  if (!node) throw ConfigError(path + ": missing required field");
  return node;
}

std::string g17(double x) { return fmt::format("{:.17g}", x); }

}  // namespace

Units parse_units(std::string_view text) {
  if (text == "bohr2") return Units::bohr2;
  if (text == "cm2e-16") return Units::cm2e16;
  throw ConfigError(fmt::format("output.units: unknown unit system '{}' (bohr2 | cm2e-16)", text));
}

std::string_view to_string(Units units) {
  return units == Units::bohr2 ? "bohr2" : "cm2e-16";
}

channels::ChannelModel RunConfig::channel_model() const {
  std::vector<double> thresholds;
  for (double e : thresholds_eV) thresholds.push_back(units::ev_to_hartree(e));
  try {
    return channels::ChannelModel::from_scattering_length_matrix(scattering_length,
                                                                 parity_products, thresholds);
  } catch (const SingularMatrixError& e) {
    throw ConfigError(std::string("channels.scattering_length_matrix: ") + e.what());
  } catch (const ArgumentError& e) {
    throw ConfigError(std::string("channels: ") + e.what());
  }
}

bool RunConfig::has_morse_state(int n) const {
  return n >= 0 && n < static_cast<int>(morse.size());
}

molecule::MorseState RunConfig::morse_state(int n) const {
  if (!has_morse_state(n)) {
    throw ConfigError(fmt::format("morse[{}]: missing Morse parameters for electronic state {}", n, n));
  }
  const auto& m = morse[n];
  try {
    if (m.u_offset) return molecule::MorseState(m.omega, m.anharm, m.r_eq, *m.u_offset, m.mu);
    const double level0 =
        n < static_cast<int>(thresholds_eV.size()) ? units::ev_to_hartree(thresholds_eV[n]) : 0.0;
    if (n == 0) return molecule::MorseState::ground(m.omega, m.anharm, m.r_eq, m.mu);
    return molecule::MorseState::with_ground_level(m.omega, m.anharm, m.r_eq, level0, m.mu);
  } catch (const ModelError& e) {
    throw ConfigError(fmt::format("morse[{}]: {}", n, e.what()));
  }
}

xsection::Options RunConfig::xsection_options() const {
  xsection::Options opts;
  opts.radial_nodes = numerics.radial_nodes;
  opts.tail_tol = numerics.tail_tol;
  opts.l_pad = numerics.l_max_pad;
  return opts;
}

std::string RunConfig::canonical() const {
  std::ostringstream os;
  os << "channels.scattering_length_matrix:";
  for (Eigen::Index i = 0; i < scattering_length.rows(); ++i) {
    os << (i ? ";" : "");
    for (Eigen::Index j = 0; j < scattering_length.cols(); ++j) {
      os << (j ? "," : "") << g17(scattering_length(i, j));
    }
  }
  os << "\nchannels.parity_products:";
  for (std::size_t i = 0; i < parity_products.size(); ++i) os << (i ? "," : "") << parity_products[i];
  os << "\nchannels.thresholds_eV:";
  for (std::size_t i = 0; i < thresholds_eV.size(); ++i) os << (i ? "," : "") << g17(thresholds_eV[i]);
  for (std::size_t i = 0; i < morse.size(); ++i) {
    const auto& m = morse[i];
    os << "\nmorse[" << i << "]:" << m.name << "," << g17(m.omega) << "," << g17(m.anharm) << ","
       << g17(m.r_eq) << "," << (m.u_offset ? g17(*m.u_offset) : std::string("auto")) << ","
       << g17(m.mu);
  }
  os << "\nnumerics:" << numerics.radial_nodes << "," << numerics.l_max_pad << ","
     << g17(numerics.tail_tol);
  os << "\noutput:" << to_string(output.units) << "," << g17(output.angle_step_deg) << ","
     << g17(output.energy_grid_eV[0]) << "," << g17(output.energy_grid_eV[1]) << ","
     << g17(output.energy_grid_eV[2]) << "\n";
  return os.str();
}

std::string RunConfig::hash() const {
  const std::string text = canonical();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("config hash: SHA-256 digest failed");
  }
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

void validate(const RunConfig& c) {
  const auto n = c.scattering_length.rows();
  if (n == 0 || c.scattering_length.cols() != n) {
    throw ConfigError("channels.scattering_length_matrix: must be a non-empty square matrix");
  }
  if ((c.scattering_length - c.scattering_length.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw ConfigError("channels.scattering_length_matrix: matrix is not symmetric");
  }
  if (static_cast<Eigen::Index>(c.parity_products.size()) != n) {
    throw ConfigError("channels.parity_products: need one entry per channel");
  }
  for (int p : c.parity_products) {
    if (p != 1 && p != -1) throw ConfigError("channels.parity_products: entries must be +1 or -1");
  }
  if (c.parity_products[0] != 1) throw ConfigError("channels.parity_products[0]: must be +1");
  if (static_cast<Eigen::Index>(c.thresholds_eV.size()) != n) {
    throw ConfigError("channels.thresholds_eV: need one entry per channel");
  }
  if (c.thresholds_eV[0] != 0.0) throw ConfigError("channels.thresholds_eV[0]: must be 0");
  for (double t : c.thresholds_eV) {
    if (!std::isfinite(t)) throw ConfigError("channels.thresholds_eV: entries must be finite");
  }
  if (c.morse.empty()) throw ConfigError("morse: at least the ground electronic state is required");
  for (int i = 0; i < static_cast<int>(c.morse.size()); ++i) (void)c.morse_state(i);
  if (c.numerics.radial_nodes < 2) throw ConfigError("numerics.radial_nodes: must be >= 2");
  if (c.numerics.l_max_pad < 1) throw ConfigError("numerics.l_max_pad: must be >= 1");
  if (!(c.numerics.tail_tol > 0.0)) throw ConfigError("numerics.tail_tol: must be > 0");
  if (!(c.output.angle_step_deg > 0.0)) throw ConfigError("output.angle_step_deg: must be > 0");
  const auto& grid = c.output.energy_grid_eV;
  if (!(grid[0] > 0.0) || !(grid[1] >= grid[0]) || !(grid[2] > 0.0)) {
    throw ConfigError("output.energy_grid_eV: need 0 < lo <= hi and step > 0");
  }
  (void)c.channel_model();
}

RunConfig parse_config(std::string_view yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("config: YAML parse error: ") + e.what());
  }
  if (!root.IsMap()) throw ConfigError("config: top level must be a mapping");

  RunConfig c;
  const YAML::Node ch = require(root, "channels", "channels");
  const YAML::Node rows = require(ch, "scattering_length_matrix", "channels.scattering_length_matrix");
  if (!rows.IsSequence() || rows.size() == 0) {
    throw ConfigError("channels.scattering_length_matrix: expected a list of rows");
  }
  const auto size = static_cast<Eigen::Index>(rows.size());
  c.scattering_length.resize(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    const auto row = read_list<double>(
        rows[static_cast<std::size_t>(i)], fmt::format("channels.scattering_length_matrix[{}]", i));
    if (static_cast<Eigen::Index>(row.size()) != size) {
      throw ConfigError(fmt::format("channels.scattering_length_matrix[{}]: expected {} entries", i, size));
    }
    for (Eigen::Index j = 0; j < size; ++j) c.scattering_length(i, j) = row[static_cast<std::size_t>(j)];
  }
  c.parity_products = read_list<int>(require(ch, "parity_products", "channels.parity_products"),
                                     "channels.parity_products");
  c.thresholds_eV = read_list<double>(require(ch, "thresholds_eV", "channels.thresholds_eV"),
                                      "channels.thresholds_eV");

  const YAML::Node morse = require(root, "morse", "morse");
  if (!morse.IsSequence()) throw ConfigError("morse: expected a list of electronic states");
  for (std::size_t i = 0; i < morse.size(); ++i) {
    const std::string path = fmt::format("morse[{}]", i);
    const YAML::Node m = morse[i];
    MorseConfig mc;
    mc.name = m["name"] ? m["name"].as<std::string>() : fmt::format("state{}", i);
    mc.omega = read_scalar<double>(require(m, "omega", path + ".omega"), path + ".omega");
    mc.anharm = read_scalar<double>(require(m, "anharm", path + ".anharm"), path + ".anharm");
    mc.r_eq = read_scalar<double>(require(m, "r_eq", path + ".r_eq"), path + ".r_eq");
    if (m["u_offset"]) mc.u_offset = read_scalar<double>(m["u_offset"], path + ".u_offset");
    if (m["mu"]) mc.mu = read_scalar<double>(m["mu"], path + ".mu");
    c.morse.push_back(mc);
  }

  if (const YAML::Node num = root["numerics"]) {
    if (num["radial_nodes"]) c.numerics.radial_nodes = read_scalar<int>(num["radial_nodes"], "numerics.radial_nodes");
    if (num["l_max_pad"]) c.numerics.l_max_pad = read_scalar<int>(num["l_max_pad"], "numerics.l_max_pad");
    if (num["tail_tol"]) c.numerics.tail_tol = read_scalar<double>(num["tail_tol"], "numerics.tail_tol");
  }
  if (const YAML::Node out = root["output"]) {
    if (out["units"]) c.output.units = parse_units(read_scalar<std::string>(out["units"], "output.units"));
    if (out["angle_step_deg"]) {
      c.output.angle_step_deg = read_scalar<double>(out["angle_step_deg"], "output.angle_step_deg");
    }
    if (out["energy_grid_eV"]) {
      const auto grid = read_list<double>(out["energy_grid_eV"], "output.energy_grid_eV");
      if (grid.size() != 3) throw ConfigError("output.energy_grid_eV: expected [lo, hi, step]");
      c.output.energy_grid_eV = {grid[0], grid[1], grid[2]};
    }
  }
  validate(c);
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace zrp::cli
