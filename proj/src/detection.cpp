#include "rotint/detection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rotint/constants.hpp"
#include "rotint/errors.hpp"
#include "rotint/kinematics.hpp"

namespace rotint {

namespace {

double clamp_probability(double raw, const char* what) {
  if (!std::isfinite(raw) || raw < -guards::probability_slack ||
      raw > 1.0 + guards::probability_slack) {
    throw numerical_error(std::string(what) + " = " + std::to_string(raw) +
                          " lies outside [0, 1] beyond the guard slack");
  }
  return std::clamp(raw, 0.0, 1.0);
}

void require_normalized(double norm2, const char* what) {
  if (std::abs(norm2 - 1.0) > guards::norm_tolerance) {
    throw unnormalized_state_error(std::string(what) +
                                   ": state must be normalized (norm^2 = " +
                                   std::to_string(norm2) + ")");
  }
}

}  // namespace

OnePhotonResult p1(const OnePhotonState& state) {
  state.require_shared_axis();
  require_normalized(state.norm_squared(), "p1");

  const std::complex<double> overlap =
      overlap_integral(state.mode_a, state.mode_b);
  OnePhotonResult r;
  r.raw_p_c = 0.5 + overlap.real();
  r.raw_p_d = 0.5 - overlap.real();
  r.p_c = clamp_probability(r.raw_p_c, "p1: P_c");
  r.p_d = clamp_probability(r.raw_p_d, "p1: P_d");
  return r;
}

std::pair<double, double> p1_sagnac_closed(double mean_frequency, double area,
                                           double rotation_frequency_hz) {
  if (!(mean_frequency > 0.0)) {
    throw validation_error("p1_sagnac_closed: mean frequency must be positive");
  }
  const double t_s = sagnac_delay(area, rotation_frequency_hz);
  const double c = std::cos(mean_frequency * t_s);
  return {0.5 * (1.0 + c), 0.5 * (1.0 - c)};
}

TwoPhotonResult p2(const TwoPhotonSpectrum& psi) {
  require_normalized(psi.norm_squared(), "p2");
  const std::complex<double> overlap = swap_overlap(psi);
  if (std::abs(overlap.imag()) > guards::swap_imaginary_residue) {
    throw numerical_error(
        "p2: exchange overlap has a non-real residue (Im = " +
        std::to_string(overlap.imag()) + ")");
  }
  TwoPhotonResult r;
  r.raw_p2 = 0.5 - 0.5 * overlap.real();
  r.p2 = clamp_probability(r.raw_p2, "p2");
  return r;
}

double p2_hom_closed(double intensity_std, double sagnac_delay, double delay) {
  if (!(intensity_std > 0.0)) {
    throw validation_error("p2_hom_closed: bandwidth must be positive");
  }
  const double x = intensity_std * (sagnac_delay - delay);
  return 0.5 - 0.5 * std::exp(-x * x);
}

double p2_reveal_conceal_closed(double mean_frequency, double amplitude_std,
                                double sagnac_delay) {
  if (!(mean_frequency > 0.0)) {
    throw validation_error(
        "p2_reveal_conceal_closed: mean frequency must be positive");
  }
  if (!(amplitude_std > 0.0)) {
    throw validation_error(
        "p2_reveal_conceal_closed: bandwidth must be positive");
  }
  const double x = amplitude_std * sagnac_delay;
  const double eps = std::exp(-x * x / 8.0);
  const double eps2 = eps * eps;
  const double denominator =
      4.0 * (1.0 + std::cos(mean_frequency * sagnac_delay) * eps);
  if (denominator <= guards::denominator_floor) {
    throw singular_denominator_error(
        "p2_reveal_conceal_closed: denominator too small (" +
        std::to_string(denominator) + ")");
  }
  return (1.0 - eps2 * eps2) / denominator;
}

Classification classify(double p2_value) {
  if (!(p2_value >= 0.0 && p2_value <= 1.0)) {
    throw validation_error("classify: probability must be in [0, 1]");
  }
  Classification c;
  if (p2_value < 0.25) {
    c.band = CoincidenceClass::Coalescence;
  } else if (p2_value <= 0.5) {
    c.band = CoincidenceClass::ClassicalRange;
  } else {
    c.band = CoincidenceClass::AntiCoalescence;
  }
  c.entanglement_witness = p2_value > 0.5;
  return c;
}

std::string to_string(CoincidenceClass band) {
  switch (band) {
    case CoincidenceClass::Coalescence:
      return "Coalescence";
    case CoincidenceClass::ClassicalRange:
      return "ClassicalRange";
    case CoincidenceClass::AntiCoalescence:
      return "AntiCoalescence";
  }
  return "unknown";
}

}  // namespace rotint
