#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zrp/channels.hpp"
#include "zrp/molecule.hpp"

namespace zrp::xsection {

using channels::Complex;

struct Options {
  /// Gauss nodes on the vibrational reference interval.
  int radial_nodes = molecule::kDefaultRadialNodes;
  /// Partial-wave sums stop once three consecutive contributions are each
  /// below tail_tol times the running sum.
  double tail_tol = 1e-10;
  /// Bessel tables extend this far past ceil(k R_max) and grow in steps of
  /// the same size if the tail criterion is not yet met.
  int l_pad = 20;
  /// When > 0, sum exactly up to this order instead of adaptively.
  int l_max = 0;
};

enum class CurveKind { dcs_pure, dcs_vib, ics_pure, ics_vib };

const char* to_string(CurveKind kind);

struct CurveMeta {
  int channel = 1;
  int v = 0;
  std::optional<int> v_prime;
  /// Free-form snapshot of the parameter set that produced the curve.
  std::string parameters;
};

/// Abscissa in degrees (DCS) or eV (ICS); values in bohr^2/sr or bohr^2.
struct CrossSectionCurve {
  CurveKind kind = CurveKind::dcs_pure;
  std::vector<double> abscissa;
  std::vector<double> values;
  /// Per point: channel closed at this abscissa (ICS scans only).
  std::vector<bool> below_threshold;
  CurveMeta meta;
};

/// Value of a truncated partial-wave sum and the order it stopped at.
struct SeriesValue {
  double value = 0.0;
  int l_max = 0;
};

/// Orientation-averaged pure electronic cross sections n <- (0, v), summed
/// over final vibrational states by closure. Omega factors and |X_0v|^2 are
/// tabulated once on the radial grid; dcs() and ics() are then cheap.
class PureElectronic {
 public:
  /// Energies in hartree. Throws ClosedChannelError if channel n is closed.
  PureElectronic(const channels::ChannelModel& model, const molecule::MorseState& morse0, int v,
                 double e_in, int n, const Options& opts = {});

  /// dsigma/dOmega at scattering angle `angle` (radians), bohr^2/sr.
  double dcs(double angle) const;
  /// Integral cross section, bohr^2.
  double ics() const;

  double k_in() const noexcept { return k0_; }
  double k_out() const noexcept { return k_; }

 private:
  int eta_ = 1;
  double k0_ = 0.0;
  double k_ = 0.0;
  std::vector<double> radius_;
  std::vector<double> weight_;  // quadrature weight * |X_0v|^2
  std::vector<Complex> om_plus_;
  std::vector<Complex> om_minus_;
};

/// Orientation-averaged electron-vibrational cross sections (n, v') <- (0, v).
/// The outgoing momentum follows k^2/2 + E_nv' = k0^2/2 + E_0v and replaces
/// the channel-n momentum inside Lambda when n != 0.
class Vibronic {
 public:
  Vibronic(const channels::ChannelModel& model, const molecule::MorseState& morse0,
           const molecule::MorseState& morse_n, int v, int v_prime, double e_in, int n,
           const Options& opts = {});

  double dcs(double angle) const { return dcs_series(angle).value; }
  double ics() const { return ics_series().value; }

  SeriesValue dcs_series(double angle) const;
  SeriesValue ics_series() const;

  double k_in() const noexcept { return k0_; }
  double k_out() const noexcept { return k_; }

 private:
  Options opts_;
  int eta_ = 1;
  double k0_ = 0.0;
  double k_ = 0.0;
  double r_hi_ = 0.0;
  std::vector<double> radius_;
  std::vector<double> weight_;  // quadrature weight * X_nv' X_0v
  std::vector<Complex> om_plus_;
  std::vector<Complex> om_minus_;
};

double dcs_pure(const channels::ChannelModel& model, const molecule::MorseState& morse0, int v,
                double e_in, int n, double angle, const Options& opts = {});

double dcs_vib(const channels::ChannelModel& model, const molecule::MorseState& morse0,
               const molecule::MorseState& morse_n, int v, int v_prime, double e_in, int n,
               double angle, const Options& opts = {});

double ics_pure(const channels::ChannelModel& model, const molecule::MorseState& morse0, int v,
                double e_in, int n, const Options& opts = {});

double ics_vib(const channels::ChannelModel& model, const molecule::MorseState& morse0,
               const molecule::MorseState& morse_n, int v, int v_prime, double e_in, int n,
               const Options& opts = {});

/// Outgoing momentum for (n, v') <- (0, v) at incident energy e_in, or
/// nullopt when the transition is energetically closed.
std::optional<double> vibronic_momentum(const molecule::MorseState& morse0,
                                        const molecule::MorseState& morse_n, int v, int v_prime,
                                        double e_in);

}  // namespace zrp::xsection
