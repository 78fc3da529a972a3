#pragma once

#include <array>
#include <complex>

#include "rotint/evolution.hpp"
#include "rotint/kinematics.hpp"
#include "rotint/spectra.hpp"

namespace rotint {

// A 2x2 mode map acting on (a, b) -> (c, d), row-major.
struct BeamSplitterMap {
  std::array<std::complex<double>, 4> m{};

  // The balanced splitter (1/sqrt(2)) [[1, 1], [1, -1]]. Real, symmetric,
  // unitary and involutive: applying it twice is the identity.
  static BeamSplitterMap balanced();

  std::complex<double> at(int row, int col) const { return m[2 * row + col]; }
};

// Applies the balanced splitter pointwise across the spectrum:
// psi_c = (psi_a + psi_b)/sqrt(2), psi_d = (psi_a - psi_b)/sqrt(2).
// Total probability is preserved for arbitrary (not only normalized) input.
OnePhotonState beamsplit_one_photon(const OnePhotonState& state);

// One photon split into counter-propagating loop directions, evolved one
// full pass. Recombination and detection happen in `detection`; this
// returns the pre-splitter state (modes still labelled by direction).
OnePhotonState build_quantum_sagnac(const PlatformConfig& cfg,
                                    const GaussianSpec& photon,
                                    const GridSettings& grid = {});

// Two independent photons entering opposite ports with a relative delay
// `delay` (seconds) applied to the first, each riding one direction for a
// full pass. Returns the normalized evolved product spectrum.
TwoPhotonSpectrum build_rotating_hom(const PlatformConfig& cfg,
                                     const GaussianSpec& photon, double delay,
                                     const GridSettings& grid = {});

// Energy-correlated photon pair sent through the lossy loop filter once.
// Returns the normalized surviving spectrum.
TwoPhotonSpectrum build_reveal_conceal(const PlatformConfig& cfg,
                                       const GaussianSpec& photon,
                                       const GridSettings& grid = {});

}  // namespace rotint
