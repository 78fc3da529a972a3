#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "rotint/kinematics.hpp"
#include "rotint/spectra.hpp"

namespace rotint {

// Propagation direction inside the loop relative to the platform rotation.
enum class ModeDirection { CounterRotating, CoRotating };  // "+" / "-"

// Everything mode_frequency / the evolution operators need to know about
// one propagation direction on a rotating platform.
struct EvolutionParams {
  double beta = 0.0;      // r Omega / (n c), signed
  double rim_beta = 0.0;  // r Omega / c, signed (relativistic factor only)
  double duration = 0.0;  // s; a full pass is t_f = L n / c
  ModeDirection direction = ModeDirection::CounterRotating;

  static EvolutionParams for_mode(const PlatformConfig& cfg,
                                  ModeDirection direction);

  // +1 for CounterRotating, -1 for CoRotating.
  double direction_sign() const;

  // Throws validation_error on duration < 0 or |rim_beta| >= 1.
  void validate() const;
};

// Doppler-shifted mode energy (1 + s beta) w, with s = +-1 per direction.
// With relativistic = true the rim time-dilation factor is included:
// Gamma (1 + s beta) w.
double mode_frequency(double omega, const EvolutionParams& params,
                      bool relativistic = false);

// Free evolution over `duration` with the common phase exp(-i w t) dropped:
// mode a picks up exp(+i w beta t), mode b exp(-i w beta t).
OnePhotonState evolve_one_photon(OnePhotonState state, double beta,
                                 double duration);

// Same counter-propagating phase pair on a two-photon amplitude whose first
// frequency rides the "+" direction and second the "-" direction.
TwoPhotonSpectrum evolve_two_photon(TwoPhotonSpectrum psi, double beta,
                                    double duration);

// One pass of the lossy loop filter: the first-frequency dependence is
// multiplied by cos(w1 beta t), the second by the pure phase
// exp(-i w2 beta t), and the result is renormalized.
struct LoopAmplitudeResult {
  TwoPhotonSpectrum spectrum;       // unit norm
  double survival_probability;      // norm^2 before renormalization
};

// Requires a normalized input (unnormalized_state_error otherwise); throws
// zero_norm_error when the surviving probability falls below the guard
// threshold (the cosine annihilated the spectrum).
LoopAmplitudeResult sagnac_loop_amplitude(const TwoPhotonSpectrum& psi,
                                          double beta, double duration);

// Platform rotation rate as a function of time. Uniform profiles remember
// that they are uniform so closed-form fast paths and exactness tests can
// detect them; time-dependent profiles come from a callable or from
// piecewise-linear (t, Omega) samples.
class RotationProfile {
 public:
  static RotationProfile uniform(double omega);
  static RotationProfile from_function(std::function<double(double)> omega_of_t);

  // Piecewise-linear interpolation through (t, Omega) samples; times must be
  // strictly increasing and at least two samples are required. Evaluation
  // outside the sampled range clamps to the end values. The sample times
  // become integration breakpoints for dynamical_phase.
  static RotationProfile piecewise_linear(
      std::vector<std::pair<double, double>> samples);

  double omega(double t) const;
  bool is_uniform() const;
  double uniform_omega() const;  // throws validation_error if not uniform

  // Interior knot times (empty for uniform / callable profiles).
  const std::vector<double>& breakpoints() const;

 private:
  RotationProfile() = default;

  bool uniform_ = false;
  double uniform_value_ = 0.0;
  std::function<double(double)> fn_;
  std::vector<double> breakpoints_;
};

// Accumulated dynamical phase of one mode over [0, duration]:
//   phi = integral Gamma(t) (1 + s beta(t)) w dt,
// with beta(t) = r Omega(t) / (n c), Gamma(t) the rim Lorentz factor and
// s = +-1 per direction. Evaluated by adaptive quadrature (relative
// tolerance 1e-12, at least 64 seed intervals, split at profile
// breakpoints), so uniform profiles reproduce Gamma (1 + s beta) w t_f to
// that tolerance. Throws superluminal_error if the profile ever spins the
// rim at or beyond c.
double dynamical_phase(const RotationProfile& profile, double omega,
                       ModeDirection direction, double radius,
                       double refractive_index, double duration);

}  // namespace rotint
