#include "rotint/interferometer.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

#include "rotint/errors.hpp"

namespace rotint {

namespace {
constexpr std::complex<double> imag_unit{0.0, 1.0};
const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
}  // namespace

BeamSplitterMap BeamSplitterMap::balanced() {
  BeamSplitterMap bs;
  bs.m = {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
  return bs;
}

OnePhotonState beamsplit_one_photon(const OnePhotonState& state) {
  state.require_shared_axis();
  OnePhotonState out;
  out.mode_a.axis = state.mode_a.axis;
  out.mode_b.axis = state.mode_b.axis;
  const std::size_t n = state.mode_a.values.size();
  out.mode_a.values.resize(n);
  out.mode_b.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> a = state.mode_a.values[i];
    const std::complex<double> b = state.mode_b.values[i];
    out.mode_a.values[i] = (a + b) * inv_sqrt2;  // port c
    out.mode_b.values[i] = (a - b) * inv_sqrt2;  // port d
  }
  return out;
}

OnePhotonState build_quantum_sagnac(const PlatformConfig& cfg,
                                    const GaussianSpec& photon,
                                    const GridSettings& grid) {
  cfg.validate();
  const SpectralAmplitude g = SpectralAmplitude::sampled_gaussian(photon, grid);

  // The first splitter pass puts the photon into an equal superposition of
  // the two loop directions.
  OnePhotonState state;
  state.mode_a.axis = g.axis;
  state.mode_b.axis = g.axis;
  state.mode_a.values.resize(g.values.size());
  state.mode_b.values.resize(g.values.size());
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    state.mode_a.values[i] = g.values[i] * inv_sqrt2;
    state.mode_b.values[i] = g.values[i] * inv_sqrt2;
  }

  return evolve_one_photon(std::move(state), cfg.beta(),
                           cfg.propagation_time());
}

TwoPhotonSpectrum build_rotating_hom(const PlatformConfig& cfg,
                                     const GaussianSpec& photon, double delay,
                                     const GridSettings& grid) {
  cfg.validate();
  if (!std::isfinite(delay)) {
    throw validation_error("build_rotating_hom: delay must be finite");
  }
  const SpectralAmplitude g = SpectralAmplitude::sampled_gaussian(photon, grid);

  // Photon 1 enters `delay` seconds late: a linear spectral phase.
  SpectralAmplitude delayed = g;
  for (std::size_t i = 0; i < delayed.values.size(); ++i) {
    delayed.values[i] *= std::exp(-imag_unit * (delayed.axis[i] * delay));
  }

  TwoPhotonSpectrum psi = TwoPhotonSpectrum::product(delayed, g);
  psi = normalize(std::move(psi));
  return evolve_two_photon(std::move(psi), cfg.beta(), cfg.propagation_time());
}

TwoPhotonSpectrum build_reveal_conceal(const PlatformConfig& cfg,
                                       const GaussianSpec& photon,
                                       const GridSettings& grid) {
  cfg.validate();
  TwoPhotonSpectrum psi = TwoPhotonSpectrum::correlated_gaussian(photon, grid);
  return sagnac_loop_amplitude(psi, cfg.beta(), cfg.propagation_time())
      .spectrum;
}

}  // namespace rotint
