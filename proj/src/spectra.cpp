#include "rotint/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rotint/errors.hpp"
#include "rotint/quadrature.hpp"

namespace rotint {

namespace {

constexpr double sqrt2 = std::numbers::sqrt2;

// Below this the squared norm is treated as zero rather than divided by.
constexpr double norm_floor = 1e-240;

std::vector<double> axis_weights(const FrequencyAxis& axis) {
  return simpson_weights(axis.points, axis.step);
}

void require_matching_sizes(const FrequencyAxis& axis, std::size_t values,
                            const char* what) {
  if (axis.points != values) {
    throw validation_error(std::string(what) +
                           ": value count does not match the axis");
  }
}

void require_square(const TwoPhotonGrid& g, const char* what) {
  if (g.values.size() != g.axis.points * g.axis.points) {
    throw validation_error(std::string(what) +
                           ": grid value count does not match the axis");
  }
}

double scaled_norm_check(double norm2, const char* what) {
  if (!std::isfinite(norm2) || norm2 < norm_floor) {
    throw zero_norm_error(std::string(what) +
                          ": norm too small to normalize (norm^2 = " +
                          std::to_string(norm2) + ")");
  }
  return 1.0 / std::sqrt(norm2);
}

}  // namespace

double GaussianSpec::amplitude_std() const {
  return convention == GaussianConvention::AmplitudeStd ? bandwidth
                                                        : bandwidth * sqrt2;
}

double GaussianSpec::intensity_std() const {
  return convention == GaussianConvention::IntensityStd ? bandwidth
                                                        : bandwidth / sqrt2;
}

void GaussianSpec::validate() const {
  if (!(mean > 0.0) || !std::isfinite(mean)) {
    throw validation_error("GaussianSpec: mean frequency must be positive");
  }
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw validation_error("GaussianSpec: bandwidth must be positive");
  }
}

FrequencyAxis FrequencyAxis::centered(double center, double half_span,
                                      std::size_t points) {
  if (points < 2) {
    throw validation_error("FrequencyAxis: need at least 2 points");
  }
  if (!(half_span > 0.0) || !std::isfinite(half_span)) {
    throw validation_error("FrequencyAxis: half-span must be positive");
  }
  FrequencyAxis axis;
  axis.step = 2.0 * half_span / static_cast<double>(points - 1);
  axis.start = center - half_span;
  axis.points = points;
  return axis;
}

void GridSettings::validate() const {
  if (!(half_span_sigmas > 0.0)) {
    throw validation_error("GridSettings: half-span must be positive");
  }
  if (points < 3) {
    throw validation_error("GridSettings: need at least 3 points");
  }
}

SpectralAmplitude SpectralAmplitude::sampled_gaussian(const GaussianSpec& spec,
                                                      const GridSettings& grid) {
  spec.validate();
  grid.validate();
  const double s = spec.amplitude_std();
  SpectralAmplitude psi;
  psi.axis = FrequencyAxis::centered(spec.mean, grid.half_span_sigmas * s,
                                     grid.points);
  psi.values.resize(grid.points);
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double x = (psi.axis[i] - spec.mean) / s;
    psi.values[i] = std::exp(-0.5 * x * x);
  }
  return normalize(std::move(psi));
}

double SpectralAmplitude::norm_squared() const {
  require_matching_sizes(axis, values.size(), "SpectralAmplitude");
  const std::vector<double> w = axis_weights(axis);
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    acc += w[i] * std::norm(values[i]);
  }
  return acc;
}

std::complex<double> overlap_integral(const SpectralAmplitude& a,
                                      const SpectralAmplitude& b) {
  if (!(a.axis == b.axis)) {
    throw validation_error("overlap_integral: amplitudes must share an axis");
  }
  require_matching_sizes(a.axis, a.values.size(), "overlap_integral");
  require_matching_sizes(b.axis, b.values.size(), "overlap_integral");
  const std::vector<double> w = axis_weights(a.axis);
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    acc += w[i] * std::conj(a.values[i]) * b.values[i];
  }
  return acc;
}

SpectralAmplitude normalize(SpectralAmplitude psi) {
  const double scale = scaled_norm_check(psi.norm_squared(), "normalize");
  for (auto& v : psi.values) {
    v *= scale;
  }
  return psi;
}

double OnePhotonState::norm_squared() const {
  return mode_a.norm_squared() + mode_b.norm_squared();
}

void OnePhotonState::require_shared_axis() const {
  if (!(mode_a.axis == mode_b.axis)) {
    throw validation_error("OnePhotonState: modes must share an axis");
  }
}

OnePhotonState normalize(OnePhotonState state) {
  const double scale = scaled_norm_check(state.norm_squared(), "normalize");
  for (auto& v : state.mode_a.values) {
    v *= scale;
  }
  for (auto& v : state.mode_b.values) {
    v *= scale;
  }
  return state;
}

TwoPhotonSpectrum TwoPhotonSpectrum::product(const SpectralAmplitude& mode_1,
                                             const SpectralAmplitude& mode_2) {
  if (!(mode_1.axis == mode_2.axis)) {
    throw validation_error(
        "TwoPhotonSpectrum::product: modes must share an axis");
  }
  require_matching_sizes(mode_1.axis, mode_1.values.size(), "product");
  require_matching_sizes(mode_2.axis, mode_2.values.size(), "product");
  TwoPhotonGrid grid;
  grid.axis = mode_1.axis;
  const std::size_t n = grid.axis.points;
  grid.values.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> vi = mode_1.values[i];
    for (std::size_t j = 0; j < n; ++j) {
      grid.values[i * n + j] = vi * mode_2.values[j];
    }
  }
  return TwoPhotonSpectrum{std::move(grid)};
}

TwoPhotonSpectrum TwoPhotonSpectrum::correlated_gaussian(
    const GaussianSpec& spec, const GridSettings& grid) {
  spec.validate();
  grid.validate();
  // psi(nu) ~ g(mu + nu) g(mu - nu) = exp(-nu^2 / (2 s_nu^2)) with
  // s_nu = s / sqrt(2) for single-photon amplitude std s.
  const double s_nu = spec.amplitude_std() / sqrt2;
  CorrelatedSpectrum c;
  c.center = spec.mean;
  c.axis =
      FrequencyAxis::centered(0.0, grid.half_span_sigmas * s_nu, grid.points);
  c.values.resize(grid.points);
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double x = c.axis[i] / s_nu;
    c.values[i] = std::exp(-0.5 * x * x);
  }
  return normalize(TwoPhotonSpectrum{std::move(c)});
}

bool TwoPhotonSpectrum::is_correlated() const {
  return std::holds_alternative<CorrelatedSpectrum>(repr);
}

const TwoPhotonGrid& TwoPhotonSpectrum::grid() const {
  if (const auto* g = std::get_if<TwoPhotonGrid>(&repr)) {
    return *g;
  }
  throw validation_error("TwoPhotonSpectrum: expected a general grid");
}

const CorrelatedSpectrum& TwoPhotonSpectrum::correlated() const {
  if (const auto* c = std::get_if<CorrelatedSpectrum>(&repr)) {
    return *c;
  }
  throw validation_error("TwoPhotonSpectrum: expected a correlated spectrum");
}

TwoPhotonGrid& TwoPhotonSpectrum::grid() {
  if (auto* g = std::get_if<TwoPhotonGrid>(&repr)) {
    return *g;
  }
  throw validation_error("TwoPhotonSpectrum: expected a general grid");
}

CorrelatedSpectrum& TwoPhotonSpectrum::correlated() {
  if (auto* c = std::get_if<CorrelatedSpectrum>(&repr)) {
    return *c;
  }
  throw validation_error("TwoPhotonSpectrum: expected a correlated spectrum");
}

double TwoPhotonSpectrum::norm_squared() const {
  if (is_correlated()) {
    const CorrelatedSpectrum& c = correlated();
    require_matching_sizes(c.axis, c.values.size(), "norm_squared");
    const std::vector<double> w = axis_weights(c.axis);
    double acc = 0.0;
    for (std::size_t i = 0; i < c.values.size(); ++i) {
      acc += w[i] * std::norm(c.values[i]);
    }
    return acc;
  }
  const TwoPhotonGrid& g = grid();
  require_square(g, "norm_squared");
  const std::size_t n = g.axis.points;
  const std::vector<double> w = axis_weights(g.axis);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    const std::complex<double>* vi = g.values.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      row += w[j] * std::norm(vi[j]);
    }
    acc += w[i] * row;
  }
  return acc;
}

void TwoPhotonSpectrum::apply_mode_factors(
    const std::function<std::complex<double>(double)>& factor_1,
    const std::function<std::complex<double>(double)>& factor_2) {
  if (is_correlated()) {
    CorrelatedSpectrum& c = correlated();
    for (std::size_t i = 0; i < c.values.size(); ++i) {
      const double nu = c.axis[i];
      c.values[i] *= factor_1(c.center + nu) * factor_2(c.center - nu);
    }
    return;
  }
  TwoPhotonGrid& g = grid();
  const std::size_t n = g.axis.points;
  std::vector<std::complex<double>> f1(n), f2(n);
  for (std::size_t i = 0; i < n; ++i) {
    f1[i] = factor_1(g.axis[i]);
    f2[i] = factor_2(g.axis[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double>* vi = g.values.data() + i * n;
    const std::complex<double> a = f1[i];
    for (std::size_t j = 0; j < n; ++j) {
      vi[j] *= a * f2[j];
    }
  }
}

TwoPhotonSpectrum normalize(TwoPhotonSpectrum psi) {
  const double scale = scaled_norm_check(psi.norm_squared(), "normalize");
  if (psi.is_correlated()) {
    for (auto& v : psi.correlated().values) {
      v *= scale;
    }
  } else {
    for (auto& v : psi.grid().values) {
      v *= scale;
    }
  }
  return psi;
}

std::complex<double> swap_overlap(const TwoPhotonSpectrum& psi) {
  if (psi.is_correlated()) {
    // Exchange maps nu -> -nu, an index reversal on the symmetric axis.
    const CorrelatedSpectrum& c = psi.correlated();
    require_matching_sizes(c.axis, c.values.size(), "swap_overlap");
    const std::vector<double> w = axis_weights(c.axis);
    const std::size_t n = c.values.size();
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += w[i] * std::conj(c.values[i]) * c.values[n - 1 - i];
    }
    return acc;
  }

  const TwoPhotonGrid& g = psi.grid();
  require_square(g, "swap_overlap");
  const std::size_t n = g.axis.points;
  const std::vector<double> w = axis_weights(g.axis);
  const std::complex<double>* v = g.values.data();
  std::complex<double> acc = 0.0;
  constexpr std::size_t block = 64;  // tile the transposed access pattern
  for (std::size_t ib = 0; ib < n; ib += block) {
    const std::size_t iend = std::min(ib + block, n);
    for (std::size_t jb = 0; jb < n; jb += block) {
      const std::size_t jend = std::min(jb + block, n);
      for (std::size_t i = ib; i < iend; ++i) {
        std::complex<double> row = 0.0;
        for (std::size_t j = jb; j < jend; ++j) {
          row += w[j] * std::conj(v[i * n + j]) * v[j * n + i];
        }
        acc += w[i] * row;
      }
    }
  }
  return acc;
}

SymmetrySplit symmetry_split(const TwoPhotonSpectrum& psi) {
  SymmetrySplit split{0.0, 0.0};
  if (psi.is_correlated()) {
    const CorrelatedSpectrum& c = psi.correlated();
    require_matching_sizes(c.axis, c.values.size(), "symmetry_split");
    const std::vector<double> w = axis_weights(c.axis);
    const std::size_t n = c.values.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::complex<double> a = c.values[i];
      const std::complex<double> b = c.values[n - 1 - i];
      split.symmetric += w[i] * 0.25 * std::norm(a + b);
      split.antisymmetric += w[i] * 0.25 * std::norm(a - b);
    }
    return split;
  }

  const TwoPhotonGrid& g = psi.grid();
  require_square(g, "symmetry_split");
  const std::size_t n = g.axis.points;
  const std::vector<double> w = axis_weights(g.axis);
  const std::complex<double>* v = g.values.data();
  constexpr std::size_t block = 64;
  for (std::size_t ib = 0; ib < n; ib += block) {
    const std::size_t iend = std::min(ib + block, n);
    for (std::size_t jb = 0; jb < n; jb += block) {
      const std::size_t jend = std::min(jb + block, n);
      for (std::size_t i = ib; i < iend; ++i) {
        double sym = 0.0;
        double anti = 0.0;
        for (std::size_t j = jb; j < jend; ++j) {
          const std::complex<double> a = v[i * n + j];
          const std::complex<double> b = v[j * n + i];
          sym += w[j] * std::norm(a + b);
          anti += w[j] * std::norm(a - b);
        }
        split.symmetric += w[i] * 0.25 * sym;
        split.antisymmetric += w[i] * 0.25 * anti;
      }
    }
  }
  return split;
}

}  // namespace rotint
