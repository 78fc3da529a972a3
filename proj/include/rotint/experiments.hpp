#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rotint/kinematics.hpp"
#include "rotint/spectra.hpp"

namespace rotint {

enum class Scenario { QuantumSagnac, RotatingHom, RevealConceal };
enum class SweptParameter { RotationFrequency, Delay, Bandwidth };

std::string to_string(Scenario s);
std::string to_string(SweptParameter p);

// Inclusive uniform range lo..hi with `steps` samples.
struct SweepRange {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t steps = 0;

  double at(std::size_t i) const;
  void validate() const;  // steps >= 2, hi > lo
};

// A parameter sweep over one scenario. The swept parameter overrides the
// corresponding baseline field row by row:
//   RotationFrequency -> platform rotation rate (value in Hz)
//   Delay             -> relative input delay (s; RotatingHom only)
//   Bandwidth         -> photon.bandwidth (rad/s, photon.convention)
struct SweepSpec {
  Scenario scenario = Scenario::RevealConceal;
  SweptParameter swept = SweptParameter::RotationFrequency;
  SweepRange range{0.0, 3.0, 600};

  PlatformConfig platform;
  GaussianSpec photon;
  double delay = 0.0;  // s, baseline delay for RotatingHom

  bool closed_form = true;
  bool quadrature = true;
  GridSettings grid;

  void validate() const;
};

// One sweep sample. A row that threw carries the message in `error` and the
// classification literal "error"; rows of the one-detector scenario (no
// coincidence to classify) carry "na". `methods_agree` is false when both
// methods ran and disagree by more than the cross-check tolerance (1e-4).
struct SweepRow {
  double param = 0.0;
  std::optional<double> value_closed;
  std::optional<double> value_quadrature;
  std::string classification;
  bool methods_agree = true;
  std::optional<std::string> error;
};

// Everything needed to reproduce the sweep, echoed into the JSON output.
// The photon block records the bandwidth both in rad/s and in nm.
struct SweepProvenance {
  std::string scenario;
  std::string swept;
  SweepRange range;
  double radius = 0.0;
  int windings = 0;
  double refractive_index = 0.0;
  double area = 0.0;
  double mean_frequency = 0.0;     // rad/s
  double wavelength_nm = 0.0;
  double bandwidth = 0.0;          // rad/s, in `convention`
  double bandwidth_nm = 0.0;
  std::string convention;
  double delay = 0.0;
  double grid_half_span_sigmas = 0.0;
  std::size_t grid_points = 0;
  bool closed_form = false;
  bool quadrature = false;
  std::string version;
};

struct SweepResult {
  SweepProvenance provenance;
  std::vector<SweepRow> rows;

  bool all_methods_agree() const;
};

// Runs the sweep serially and deterministically (row order = range order).
// Per-row failures are recorded in the row, not thrown.
SweepResult run_sweep(const SweepSpec& spec);

// The two reference reveal/conceal curves: rotation-frequency sweeps over
// 0..3 Hz (600 points) for 5 nm and 40 nm bandwidth photons at 800 nm on
// the 22.7 m^2, 35-winding, n = 1.45 platform. Closed form and quadrature
// both enabled.
std::array<SweepResult, 2> fig3_dataset();

// CSV: header `param,value_closed,value_quadrature,classification`, one row
// per sample, %.17g numbers, empty field for a value that was not computed.
void write_csv(const SweepResult& result, std::ostream& out);

// JSON mirror: {"provenance": {...}, "rows": [...]} with the same numbers
// (null for a value that was not computed) plus methods_agree / error.
void write_json(const SweepResult& result, std::ostream& out);

}  // namespace rotint
