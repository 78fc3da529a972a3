#include "rotint/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <utility>

#include <json.hpp>

#include "rotint/constants.hpp"
#include "rotint/detection.hpp"
#include "rotint/errors.hpp"
#include "rotint/interferometer.hpp"
#include "rotint/units.hpp"

namespace rotint {

namespace {

// Closed form and quadrature must track each other at least this well for a
// row to count as agreeing (a much looser bound than the acceptance-grade
// agreement checked in the tests; this one flags gross breakage in data
// people export).
constexpr double method_agreement_tol = 1e-4;

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string convention_name(GaussianConvention c) {
  return c == GaussianConvention::AmplitudeStd ? "amplitude" : "intensity";
}

SweepProvenance make_provenance(const SweepSpec& spec) {
  SweepProvenance p;
  p.scenario = to_string(spec.scenario);
  p.swept = to_string(spec.swept);
  p.range = spec.range;
  p.radius = spec.platform.radius;
  p.windings = spec.platform.windings;
  p.refractive_index = spec.platform.refractive_index;
  p.area = spec.platform.area();
  p.mean_frequency = spec.photon.mean;
  p.wavelength_nm = wavelength_nm_from_angular_frequency(spec.photon.mean);
  p.bandwidth = spec.photon.bandwidth;
  p.bandwidth_nm =
      bandwidth_nm_from_angular_frequency(spec.photon.bandwidth, p.wavelength_nm);
  p.convention = convention_name(spec.photon.convention);
  p.delay = spec.delay;
  p.grid_half_span_sigmas = spec.grid.half_span_sigmas;
  p.grid_points = spec.grid.points;
  p.closed_form = spec.closed_form;
  p.quadrature = spec.quadrature;
  p.version = version_string;
  return p;
}

}  // namespace

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::QuantumSagnac:
      return "quantum-sagnac";
    case Scenario::RotatingHom:
      return "rotating-hom";
    case Scenario::RevealConceal:
      return "reveal-conceal";
  }
  return "unknown";
}

std::string to_string(SweptParameter p) {
  switch (p) {
    case SweptParameter::RotationFrequency:
      return "rotation-frequency";
    case SweptParameter::Delay:
      return "delay";
    case SweptParameter::Bandwidth:
      return "bandwidth";
  }
  return "unknown";
}

double SweepRange::at(std::size_t i) const {
  return lo + (hi - lo) * static_cast<double>(i) /
                  static_cast<double>(steps - 1);
}

void SweepRange::validate() const {
  if (steps < 2) {
    throw validation_error("SweepRange: need at least 2 steps");
  }
  if (!(hi > lo)) {
    throw validation_error("SweepRange: hi must exceed lo");
  }
}

void SweepSpec::validate() const {
  range.validate();
  platform.validate();
  photon.validate();
  grid.validate();
  if (!closed_form && !quadrature) {
    throw validation_error("SweepSpec: enable at least one method");
  }
  if (swept == SweptParameter::Delay && scenario != Scenario::RotatingHom) {
    throw validation_error(
        "SweepSpec: a delay sweep only applies to the rotating-hom scenario");
  }
  if (swept == SweptParameter::Bandwidth && !(range.lo > 0.0)) {
    throw validation_error("SweepSpec: bandwidth sweeps must stay positive");
  }
  if (!std::isfinite(delay)) {
    throw validation_error("SweepSpec: delay must be finite");
  }
}

bool SweepResult::all_methods_agree() const {
  for (const SweepRow& row : rows) {
    if (!row.methods_agree || row.error.has_value()) {
      return false;
    }
  }
  return true;
}

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  SweepResult result;
  result.provenance = make_provenance(spec);
  result.rows.reserve(spec.range.steps);

  for (std::size_t i = 0; i < spec.range.steps; ++i) {
    SweepRow row;
    row.param = spec.range.at(i);
    try {
      PlatformConfig platform = spec.platform;
      GaussianSpec photon = spec.photon;
      double delay = spec.delay;
      switch (spec.swept) {
        case SweptParameter::RotationFrequency:
          platform.angular_frequency = 2.0 * std::numbers::pi * row.param;
          break;
        case SweptParameter::Delay:
          delay = row.param;
          break;
        case SweptParameter::Bandwidth:
          photon.bandwidth = row.param;
          break;
      }
      const double t_s =
          sagnac_delay(platform.area(), platform.rotation_frequency());

      switch (spec.scenario) {
        case Scenario::QuantumSagnac:
          if (spec.closed_form) {
            row.value_closed =
                p1_sagnac_closed(photon.mean, platform.area(),
                                 platform.rotation_frequency())
                    .first;
          }
          if (spec.quadrature) {
            row.value_quadrature =
                p1(build_quantum_sagnac(platform, photon, spec.grid)).p_c;
          }
          row.classification = "na";
          break;
        case Scenario::RotatingHom:
          if (spec.closed_form) {
            row.value_closed =
                p2_hom_closed(photon.intensity_std(), t_s, delay);
          }
          if (spec.quadrature) {
            row.value_quadrature =
                p2(build_rotating_hom(platform, photon, delay, spec.grid)).p2;
          }
          break;
        case Scenario::RevealConceal:
          if (spec.closed_form) {
            row.value_closed = p2_reveal_conceal_closed(
                photon.mean, photon.amplitude_std(), t_s);
          }
          if (spec.quadrature) {
            row.value_quadrature =
                p2(build_reveal_conceal(platform, photon, spec.grid)).p2;
          }
          break;
      }

      if (spec.scenario != Scenario::QuantumSagnac) {
        const double value = row.value_closed ? *row.value_closed
                                              : *row.value_quadrature;
        row.classification = to_string(classify(value).band);
      }
      if (row.value_closed && row.value_quadrature) {
        row.methods_agree =
            std::abs(*row.value_closed - *row.value_quadrature) <
            method_agreement_tol;
      }
    } catch (const std::exception& e) {
      row.error = e.what();
      row.classification = "error";
      row.methods_agree = false;
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::array<SweepResult, 2> fig3_dataset() {
  // The reference reveal/conceal curves: 800 nm photons on a 22.7 m^2,
  // 35-winding, n = 1.45 platform, with the mean frequency and the two
  // bandwidths pinned to the values the curves were drawn with.
  SweepSpec spec;
  spec.scenario = Scenario::RevealConceal;
  spec.swept = SweptParameter::RotationFrequency;
  spec.range = SweepRange{0.0, 3.0, 600};
  spec.platform = PlatformConfig::from_area(22.7, 35, 1.45, 0.0);
  spec.photon = GaussianSpec{2.36e15, 1.47e13, GaussianConvention::AmplitudeStd};

  SweepSpec wide = spec;
  wide.photon.bandwidth = 1.18e14;

  return {run_sweep(spec), run_sweep(wide)};
}

void write_csv(const SweepResult& result, std::ostream& out) {
  out << "param,value_closed,value_quadrature,classification\n";
  for (const SweepRow& row : result.rows) {
    out << fmt(row.param) << ',';
    if (row.value_closed) {
      out << fmt(*row.value_closed);
    }
    out << ',';
    if (row.value_quadrature) {
      out << fmt(*row.value_quadrature);
    }
    out << ',' << row.classification << '\n';
  }
}

void write_json(const SweepResult& result, std::ostream& out) {
  using json = nlohmann::ordered_json;
  const SweepProvenance& p = result.provenance;
  json doc;
  doc["provenance"] = {
      {"scenario", p.scenario},
      {"swept", p.swept},
      {"range", {{"lo", p.range.lo}, {"hi", p.range.hi}, {"steps", p.range.steps}}},
      {"platform",
       {{"radius_m", p.radius},
        {"windings", p.windings},
        {"refractive_index", p.refractive_index},
        {"area_m2", p.area}}},
      {"photon",
       {{"mean_rad_s", p.mean_frequency},
        {"wavelength_nm", p.wavelength_nm},
        {"bandwidth_rad_s", p.bandwidth},
        {"bandwidth_nm", p.bandwidth_nm},
        {"convention", p.convention}}},
      {"delay_s", p.delay},
      {"grid", {{"half_span_sigmas", p.grid_half_span_sigmas}, {"points", p.grid_points}}},
      {"methods",
       {{"closed_form", p.closed_form}, {"quadrature", p.quadrature}}},
      {"version", p.version},
  };
  json rows = json::array();
  for (const SweepRow& row : result.rows) {
    json r;
    r["param"] = row.param;
    r["value_closed"] =
        row.value_closed ? json(*row.value_closed) : json(nullptr);
    r["value_quadrature"] =
        row.value_quadrature ? json(*row.value_quadrature) : json(nullptr);
    r["classification"] = row.classification;
    r["methods_agree"] = row.methods_agree;
    if (row.error) {
      r["error"] = *row.error;
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace rotint
