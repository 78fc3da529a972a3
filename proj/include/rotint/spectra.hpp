#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

namespace rotint {

// Two ways of quoting a Gaussian bandwidth. AmplitudeStd means `bandwidth`
// is the standard deviation of the amplitude profile exp(-(w-mu)^2/(2s^2));
// IntensityStd means it is the std of |amplitude|^2 (a factor sqrt(2)
// narrower). Closed-form expressions in this library each have a native
// convention; the converters below make the choice explicit at call sites.
enum class GaussianConvention { AmplitudeStd, IntensityStd };

struct GaussianSpec {
  double mean = 0.0;       // mu, rad/s
  double bandwidth = 0.0;  // rad/s, meaning set by `convention`
  GaussianConvention convention = GaussianConvention::AmplitudeStd;

  double amplitude_std() const;
  double intensity_std() const;

  // Throws validation_error unless mean > 0 and bandwidth > 0.
  void validate() const;
};

// Uniform sample axis in angular frequency (or detuning), rad/s.
struct FrequencyAxis {
  double start = 0.0;
  double step = 0.0;
  std::size_t points = 0;

  double operator[](std::size_t i) const {
    return start + step * static_cast<double>(i);
  }
  double back() const { return (*this)[points - 1]; }

  static FrequencyAxis centered(double center, double half_span,
                                std::size_t points);

  friend bool operator==(const FrequencyAxis&, const FrequencyAxis&) = default;
};

// Discretization policy for sampled spectra: the axis spans
// center +- half_span_sigmas * (amplitude std) with `points` samples.
struct GridSettings {
  double half_span_sigmas = 8.0;
  std::size_t points = 1024;

  void validate() const;  // half_span_sigmas > 0, points >= 3
};

// A single-mode spectral amplitude psi(w) sampled on a uniform axis.
// Values are amplitude densities: norms are quadratures of |psi|^2 over w.
struct SpectralAmplitude {
  FrequencyAxis axis;
  std::vector<std::complex<double>> values;

  // Unit-norm Gaussian exp(-(w-mu)^2/(2 s^2)) sampled per `grid`.
  static SpectralAmplitude sampled_gaussian(const GaussianSpec& spec,
                                            const GridSettings& grid = {});

  double norm_squared() const;  // integral of |psi|^2 dw
};

// integral of conj(a) * b dw; the two amplitudes must share an axis.
std::complex<double> overlap_integral(const SpectralAmplitude& a,
                                      const SpectralAmplitude& b);

// Returns the input scaled to unit norm. Throws zero_norm_error when the
// norm is too small to divide by.
SpectralAmplitude normalize(SpectralAmplitude psi);

// One photon shared between the counter-rotating (a) and co-rotating (b)
// directions of the loop. Jointly normalized:
// integral (|a|^2 + |b|^2) dw = 1.
struct OnePhotonState {
  SpectralAmplitude mode_a;
  SpectralAmplitude mode_b;

  double norm_squared() const;

  // Throws validation_error when the two modes are not sampled on the
  // same axis (every operation in this library assumes they are).
  void require_shared_axis() const;
};

OnePhotonState normalize(OnePhotonState state);

// General two-photon amplitude psi(w1, w2) on a shared square axis,
// row-major: values[i * axis.points + j] = psi(axis[i], axis[j]).
struct TwoPhotonGrid {
  FrequencyAxis axis;
  std::vector<std::complex<double>> values;
};

// Energy-correlated amplitude: psi(w1, w2) lives on the line
// w1 = center + nu, w2 = center - nu and is stored one-dimensionally over
// the detuning nu. `axis` must be symmetric about nu = 0 so that the
// exchange w1 <-> w2 (nu -> -nu) is an index reversal.
struct CorrelatedSpectrum {
  double center = 0.0;  // mu, rad/s
  FrequencyAxis axis;   // detuning nu, rad/s
  std::vector<std::complex<double>> values;
};

// A two-photon state in one of the two representations above. Operations
// that are representation-agnostic (norms, normalization, exchange overlap,
// separable phase factors) are provided as free functions / members here;
// everything else visits the variant explicitly.
struct TwoPhotonSpectrum {
  std::variant<TwoPhotonGrid, CorrelatedSpectrum> repr;

  // Separable product psi(w1, w2) = f(w1) g(w2) on a shared axis.
  static TwoPhotonSpectrum product(const SpectralAmplitude& mode_1,
                                   const SpectralAmplitude& mode_2);

  // Unit-norm correlated Gaussian: psi(nu) ~ g(mu + nu) g(mu - nu) for the
  // given single-photon Gaussian g, i.e. exp(-nu^2 / (2 s_nu^2)) with
  // s_nu = (amplitude std) / sqrt(2).
  static TwoPhotonSpectrum correlated_gaussian(const GaussianSpec& spec,
                                               const GridSettings& grid = {});

  bool is_correlated() const;
  const TwoPhotonGrid& grid() const;              // throws if correlated
  const CorrelatedSpectrum& correlated() const;   // throws if general
  TwoPhotonGrid& grid();
  CorrelatedSpectrum& correlated();

  double norm_squared() const;

  // Multiply by a separable factor f_1(w1) * f_2(w2). This covers every
  // phase or filter operation in the library; both representations support
  // it exactly (the correlated one via w1 = mu + nu, w2 = mu - nu).
  void apply_mode_factors(
      const std::function<std::complex<double>(double)>& factor_1,
      const std::function<std::complex<double>(double)>& factor_2);
};

TwoPhotonSpectrum normalize(TwoPhotonSpectrum psi);

// Exchange overlap: the plain quadrature of conj(psi(w1, w2)) psi(w2, w1)
// over both frequencies. No normalization is applied here; callers feed
// normalized states. Real for any physical state up to quadrature noise;
// detection guards the imaginary part.
std::complex<double> swap_overlap(const TwoPhotonSpectrum& psi);

// Norms of the exchange-symmetric and -antisymmetric parts,
// psi_sym = (psi + Swap psi)/2 and psi_anti = (psi - Swap psi)/2.
// symmetric + antisymmetric == norm_squared(psi) up to quadrature noise.
struct SymmetrySplit {
  double symmetric;
  double antisymmetric;
};

SymmetrySplit symmetry_split(const TwoPhotonSpectrum& psi);

}  // namespace rotint
