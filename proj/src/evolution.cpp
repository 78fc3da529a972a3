#include "rotint/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "rotint/constants.hpp"
#include "rotint/errors.hpp"
#include "rotint/quadrature.hpp"

namespace rotint {

namespace {

constexpr std::complex<double> imag_unit{0.0, 1.0};

void apply_phase(SpectralAmplitude& psi, double rate) {
  // rate is the coefficient of omega in the accumulated phase.
  for (std::size_t i = 0; i < psi.values.size(); ++i) {
    psi.values[i] *= std::exp(imag_unit * (rate * psi.axis[i]));
  }
}

}  // namespace

EvolutionParams EvolutionParams::for_mode(const PlatformConfig& cfg,
                                          ModeDirection direction) {
  cfg.validate();
  EvolutionParams p;
  p.beta = cfg.beta();
  p.rim_beta = cfg.rim_beta();
  p.duration = cfg.propagation_time();
  p.direction = direction;
  return p;
}

double EvolutionParams::direction_sign() const {
  return direction == ModeDirection::CounterRotating ? 1.0 : -1.0;
}

void EvolutionParams::validate() const {
  if (!(duration >= 0.0) || !std::isfinite(duration)) {
    throw validation_error("EvolutionParams: duration must be >= 0");
  }
  if (std::abs(rim_beta) >= 1.0) {
    throw superluminal_error(rim_beta * speed_of_light);
  }
}

double mode_frequency(double omega, const EvolutionParams& params,
                      bool relativistic) {
  params.validate();
  const double shifted = (1.0 + params.direction_sign() * params.beta) * omega;
  if (!relativistic) {
    return shifted;
  }
  const double b = params.rim_beta;
  return shifted / std::sqrt((1.0 - b) * (1.0 + b));
}

OnePhotonState evolve_one_photon(OnePhotonState state, double beta,
                                 double duration) {
  const double accumulated = beta * duration;
  apply_phase(state.mode_a, accumulated);
  apply_phase(state.mode_b, -accumulated);
  return state;
}

TwoPhotonSpectrum evolve_two_photon(TwoPhotonSpectrum psi, double beta,
                                    double duration) {
  const double accumulated = beta * duration;
  psi.apply_mode_factors(
      [accumulated](double w) { return std::exp(imag_unit * (accumulated * w)); },
      [accumulated](double w) { return std::exp(-imag_unit * (accumulated * w)); });
  return psi;
}

LoopAmplitudeResult sagnac_loop_amplitude(const TwoPhotonSpectrum& psi,
                                          double beta, double duration) {
  const double input_norm2 = psi.norm_squared();
  if (std::abs(input_norm2 - 1.0) > guards::norm_tolerance) {
    throw unnormalized_state_error(
        "sagnac_loop_amplitude: input must be normalized (norm^2 = " +
        std::to_string(input_norm2) + ")");
  }

  const double accumulated = beta * duration;
  TwoPhotonSpectrum filtered = psi;
  filtered.apply_mode_factors(
      [accumulated](double w) {
        return std::complex<double>(std::cos(accumulated * w), 0.0);
      },
      [accumulated](double w) { return std::exp(-imag_unit * (accumulated * w)); });

  const double survival = filtered.norm_squared();
  if (survival < guards::survival_floor) {
    throw zero_norm_error(
        "sagnac_loop_amplitude: loop filter annihilated the spectrum "
        "(survival = " +
        std::to_string(survival) + ")");
  }

  const double scale = 1.0 / std::sqrt(survival);
  if (filtered.is_correlated()) {
    for (auto& v : filtered.correlated().values) {
      v *= scale;
    }
  } else {
    for (auto& v : filtered.grid().values) {
      v *= scale;
    }
  }
  return LoopAmplitudeResult{std::move(filtered), survival};
}

RotationProfile RotationProfile::uniform(double omega) {
  RotationProfile p;
  p.uniform_ = true;
  p.uniform_value_ = omega;
  return p;
}

RotationProfile RotationProfile::from_function(
    std::function<double(double)> omega_of_t) {
  if (!omega_of_t) {
    throw validation_error("RotationProfile: callable must not be empty");
  }
  RotationProfile p;
  p.fn_ = std::move(omega_of_t);
  return p;
}

RotationProfile RotationProfile::piecewise_linear(
    std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2) {
    throw validation_error("RotationProfile: need at least 2 (t, Omega) samples");
  }
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].first > samples[i - 1].first)) {
      throw validation_error(
          "RotationProfile: sample times must be strictly increasing");
    }
  }
  RotationProfile p;
  for (const auto& s : samples) {
    p.breakpoints_.push_back(s.first);
  }
  p.fn_ = [samples = std::move(samples)](double t) {
    if (t <= samples.front().first) {
      return samples.front().second;
    }
    if (t >= samples.back().first) {
      return samples.back().second;
    }
    const auto it = std::upper_bound(
        samples.begin(), samples.end(), t,
        [](double value, const auto& s) { return value < s.first; });
    const auto& [t1, w1] = *(it - 1);
    const auto& [t2, w2] = *it;
    return w1 + (w2 - w1) * (t - t1) / (t2 - t1);
  };
  return p;
}

double RotationProfile::omega(double t) const {
  return uniform_ ? uniform_value_ : fn_(t);
}

bool RotationProfile::is_uniform() const { return uniform_; }

double RotationProfile::uniform_omega() const {
  if (!uniform_) {
    throw validation_error("RotationProfile: not a uniform profile");
  }
  return uniform_value_;
}

const std::vector<double>& RotationProfile::breakpoints() const {
  return breakpoints_;
}

double dynamical_phase(const RotationProfile& profile, double omega,
                       ModeDirection direction, double radius,
                       double refractive_index, double duration) {
  if (!(radius > 0.0)) {
    throw validation_error("dynamical_phase: radius must be positive");
  }
  if (!(refractive_index >= 1.0)) {
    throw validation_error("dynamical_phase: refractive index must be >= 1");
  }
  if (!(duration >= 0.0)) {
    throw validation_error("dynamical_phase: duration must be >= 0");
  }
  if (duration == 0.0) {
    return 0.0;
  }

  const double sign =
      direction == ModeDirection::CounterRotating ? 1.0 : -1.0;
  const auto integrand = [&](double t) {
    const double rim = radius * profile.omega(t);
    const double rim_beta = rim / speed_of_light;
    if (std::abs(rim_beta) >= 1.0) {
      throw superluminal_error(rim);
    }
    const double gamma =
        1.0 / std::sqrt((1.0 - rim_beta) * (1.0 + rim_beta));
    const double beta = rim / (refractive_index * speed_of_light);
    return gamma * (1.0 + sign * beta) * omega;
  };

  // Integrate piecewise between profile breakpoints so the adaptive rule
  // never straddles a derivative discontinuity.
  std::vector<double> cuts{0.0};
  for (double t : profile.breakpoints()) {
    if (t > 0.0 && t < duration) {
      cuts.push_back(t);
    }
  }
  cuts.push_back(duration);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double phase = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    phase += adaptive_simpson(integrand, cuts[i], cuts[i + 1], 1e-12, 64);
  }
  return phase;
}

}  // namespace rotint
