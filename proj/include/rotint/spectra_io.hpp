#pragma once

#include <iosfwd>

#include "rotint/spectra.hpp"

namespace rotint {

// CSV schema for sampled spectra: header line `omega_or_nu,re,im`, then one
// row per sample at full double precision (%.17g). The first column is the
// frequency axis for a SpectralAmplitude and the detuning axis for a
// CorrelatedSpectrum; the correlated center frequency is not part of the
// schema and must travel out of band.

void write_csv(const SpectralAmplitude& psi, std::ostream& out);
void write_csv(const CorrelatedSpectrum& psi, std::ostream& out);

// Throws validation_error on a malformed header, malformed row, or a
// non-uniform axis. An empty body (header only) is also an error.
SpectralAmplitude read_spectral_amplitude_csv(std::istream& in);
CorrelatedSpectrum read_correlated_csv(std::istream& in, double center);

}  // namespace rotint
