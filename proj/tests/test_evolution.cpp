#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include <doctest.h>

#include "rotint/constants.hpp"
#include "rotint/errors.hpp"
#include "rotint/evolution.hpp"
#include "rotint/kinematics.hpp"
#include "rotint/spectra.hpp"

using namespace std::complex_literals;
using rotint::EvolutionParams;
using rotint::GaussianConvention;
using rotint::GaussianSpec;
using rotint::ModeDirection;
using rotint::PlatformConfig;
using rotint::RotationProfile;
using rotint::SpectralAmplitude;
using rotint::TwoPhotonSpectrum;

namespace {

constexpr double kMu = 2.36e15;
constexpr double kSigma = 1.47e13;

GaussianSpec amp_spec() {
  return GaussianSpec{kMu, kSigma, GaussianConvention::AmplitudeStd};
}

PlatformConfig bench_platform(double freq_hz) {
  return PlatformConfig::from_area(22.7, 35, 1.45, freq_hz);
}

}  // namespace

TEST_CASE("evolution params for a platform mode") {
  const PlatformConfig cfg = bench_platform(1.0);
  const auto plus = EvolutionParams::for_mode(cfg, ModeDirection::CounterRotating);
  CHECK(plus.beta == doctest::Approx(cfg.beta()).epsilon(1e-15));
  CHECK(plus.rim_beta == doctest::Approx(cfg.rim_beta()).epsilon(1e-15));
  CHECK(plus.duration ==
        doctest::Approx(cfg.propagation_time()).epsilon(1e-15));
  CHECK(plus.direction_sign() == 1.0);

  const auto minus = EvolutionParams::for_mode(cfg, ModeDirection::CoRotating);
  CHECK(minus.direction_sign() == -1.0);

  EvolutionParams bad = plus;
  bad.duration = -1.0;
  CHECK_THROWS_AS(bad.validate(), rotint::validation_error);
  bad = plus;
  bad.rim_beta = 1.0;
  CHECK_THROWS_AS(bad.validate(), rotint::validation_error);
}

TEST_CASE("doppler-shifted mode frequencies") {
  const PlatformConfig cfg = bench_platform(1.0);
  const double beta = cfg.beta();
  const double rim = cfg.rim_beta();
  const auto plus = EvolutionParams::for_mode(cfg, ModeDirection::CounterRotating);
  const auto minus = EvolutionParams::for_mode(cfg, ModeDirection::CoRotating);

  CHECK(rotint::mode_frequency(kMu, plus) ==
        doctest::Approx(kMu * (1.0 + beta)).epsilon(1e-15));
  CHECK(rotint::mode_frequency(kMu, minus) ==
        doctest::Approx(kMu * (1.0 - beta)).epsilon(1e-15));

  const double gamma = 1.0 / std::sqrt((1.0 - rim) * (1.0 + rim));
  CHECK(rotint::mode_frequency(kMu, plus, true) ==
        doctest::Approx(gamma * kMu * (1.0 + beta)).epsilon(1e-15));

  // The pair is symmetric about the carrier to first order in beta.
  const double up = rotint::mode_frequency(kMu, plus);
  const double down = rotint::mode_frequency(kMu, minus);
  CHECK(0.5 * (up + down) == doctest::Approx(kMu).epsilon(1e-15));
}

TEST_CASE("one-photon evolution") {
  const SpectralAmplitude g = SpectralAmplitude::sampled_gaussian(amp_spec());
  rotint::OnePhotonState state{g, g};
  for (auto& v : state.mode_a.values) {
    v /= std::sqrt(2.0);
  }
  for (auto& v : state.mode_b.values) {
    v /= std::sqrt(2.0);
  }

  SUBCASE("zero beta is the identity") {
    const auto out = rotint::evolve_one_photon(state, 0.0, 1e-6);
    CHECK(out.mode_a.values == state.mode_a.values);
    CHECK(out.mode_b.values == state.mode_b.values);
  }
  SUBCASE("counter-propagating phases with preserved norm") {
    const PlatformConfig cfg = bench_platform(1.0);
    const double beta = cfg.beta();
    const double t = cfg.propagation_time();
    const auto out = rotint::evolve_one_photon(state, beta, t);
    CHECK(out.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
    const std::size_t k = 100;
    const double w = state.mode_a.axis[k];
    const std::complex<double> expected_a =
        state.mode_a.values[k] * std::exp(1.0i * w * beta * t);
    const std::complex<double> expected_b =
        state.mode_b.values[k] * std::exp(-1.0i * w * beta * t);
    CHECK(std::abs(out.mode_a.values[k] - expected_a) < 1e-14);
    CHECK(std::abs(out.mode_b.values[k] - expected_b) < 1e-14);
  }
}

TEST_CASE("two-photon evolution") {
  const PlatformConfig cfg = bench_platform(1.0);
  const double beta = cfg.beta();
  const double t = cfg.propagation_time();

  SUBCASE("product grid picks up exp(i beta t (w1 - w2))") {
    const SpectralAmplitude g = SpectralAmplitude::sampled_gaussian(
        amp_spec(), rotint::GridSettings{8.0, 65});
    const TwoPhotonSpectrum psi = TwoPhotonSpectrum::product(g, g);
    const TwoPhotonSpectrum out = rotint::evolve_two_photon(psi, beta, t);
    CHECK(out.norm_squared() ==
          doctest::Approx(psi.norm_squared()).epsilon(1e-12));
    const auto& axis = psi.grid().axis;
    const std::size_t i = 10, j = 40, n = axis.points;
    const std::complex<double> expected =
        psi.grid().values[i * n + j] *
        std::exp(1.0i * beta * t * (axis[i] - axis[j]));
    CHECK(std::abs(out.grid().values[i * n + j] - expected) < 1e-14);
  }
  SUBCASE("correlated spectrum picks up exp(2 i beta t nu)") {
    const TwoPhotonSpectrum psi =
        TwoPhotonSpectrum::correlated_gaussian(amp_spec());
    const TwoPhotonSpectrum out = rotint::evolve_two_photon(psi, beta, t);
    CHECK(out.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
    const auto& c = psi.correlated();
    const std::size_t k = 77;
    const std::complex<double> expected =
        c.values[k] * std::exp(2.0i * beta * t * c.axis[k]);
    CHECK(std::abs(out.correlated().values[k] - expected) < 1e-14);
  }
}

TEST_CASE("lossy loop filter") {
  const PlatformConfig cfg = bench_platform(1.0);
  const double beta = cfg.beta();
  const double t = cfg.propagation_time();
  const TwoPhotonSpectrum psi =
      TwoPhotonSpectrum::correlated_gaussian(amp_spec());

  SUBCASE("survival matches the analytic filter transmission") {
    const auto result = rotint::sagnac_loop_amplitude(psi, beta, t);
    CHECK(result.spectrum.norm_squared() ==
          doctest::Approx(1.0).epsilon(1e-12));
    // Analytic transmission of cos(w1 beta t) on the correlated Gaussian:
    // (1 + cos(mu t_s) exp(-sigma^2 t_s^2 / 8)) / 2 with t_s = 2 beta t.
    const double t_s = 2.0 * beta * t;
    const double expected =
        0.5 * (1.0 + std::cos(kMu * t_s) *
                         std::exp(-kSigma * kSigma * t_s * t_s / 8.0));
    CHECK(result.survival_probability ==
          doctest::Approx(expected).epsilon(1e-10));
    CHECK(result.survival_probability ==
          doctest::Approx(0.12685978978044524).epsilon(1e-12));
  }
  SUBCASE("unnormalized input is rejected") {
    TwoPhotonSpectrum scaled = psi;
    for (auto& v : scaled.correlated().values) {
      v *= 1.1;
    }
    CHECK_THROWS_AS(rotint::sagnac_loop_amplitude(scaled, beta, t),
                    rotint::unnormalized_state_error);
  }
  SUBCASE("annihilating filter throws zero_norm_error") {
    // Narrowband photons with mu t_s = pi sit at the cosine zero; the
    // whole spectrum dies in the filter.
    const double f = rotint::speed_of_light_sq / (8.0 * 22.7 * kMu);
    const PlatformConfig dark = PlatformConfig::from_area(22.7, 35, 1.45, f);
    const GaussianSpec narrow{kMu, 1e3, GaussianConvention::AmplitudeStd};
    const TwoPhotonSpectrum line =
        TwoPhotonSpectrum::correlated_gaussian(narrow);
    CHECK_THROWS_AS(
        rotint::sagnac_loop_amplitude(line, dark.beta(),
                                      dark.propagation_time()),
        rotint::zero_norm_error);
  }
}

TEST_CASE("rotation profiles") {
  SUBCASE("uniform") {
    const RotationProfile p = RotationProfile::uniform(3.5);
    CHECK(p.is_uniform());
    CHECK(p.uniform_omega() == 3.5);
    CHECK(p.omega(0.0) == 3.5);
    CHECK(p.omega(42.0) == 3.5);
    CHECK(p.breakpoints().empty());
  }
  SUBCASE("callable") {
    const RotationProfile p = RotationProfile::from_function(
        [](double t) { return 2.0 * t; });
    CHECK_FALSE(p.is_uniform());
    CHECK(p.omega(3.0) == doctest::Approx(6.0));
    CHECK_THROWS_AS(p.uniform_omega(), rotint::validation_error);
  }
  SUBCASE("piecewise linear with clamped ends") {
    const RotationProfile p = RotationProfile::piecewise_linear(
        {{0.0, 0.0}, {1.0, 2.0}, {3.0, 2.0}});
    CHECK(p.omega(0.5) == doctest::Approx(1.0));
    CHECK(p.omega(1.0) == doctest::Approx(2.0));
    CHECK(p.omega(2.0) == doctest::Approx(2.0));
    CHECK(p.omega(-1.0) == doctest::Approx(0.0));   // clamped
    CHECK(p.omega(10.0) == doctest::Approx(2.0));   // clamped
    CHECK(p.breakpoints() == std::vector<double>{0.0, 1.0, 3.0});
  }
  SUBCASE("bad sample lists throw") {
    CHECK_THROWS_AS(RotationProfile::piecewise_linear({{0.0, 1.0}}),
                    rotint::validation_error);
    CHECK_THROWS_AS(
        RotationProfile::piecewise_linear({{0.0, 1.0}, {0.0, 2.0}}),
        rotint::validation_error);
    CHECK_THROWS_AS(
        RotationProfile::piecewise_linear({{1.0, 1.0}, {0.0, 2.0}}),
        rotint::validation_error);
  }
}

TEST_CASE("dynamical phase") {
  const PlatformConfig cfg = bench_platform(1.0);
  const double T = cfg.propagation_time();
  const double omega = kMu;

  SUBCASE("uniform profile reproduces the closed form") {
    const RotationProfile p = RotationProfile::uniform(cfg.angular_frequency);
    const double got = rotint::dynamical_phase(
        p, omega, ModeDirection::CounterRotating, cfg.radius,
        cfg.refractive_index, T);
    const double rim = cfg.rim_beta();
    const double gamma = 1.0 / std::sqrt((1.0 - rim) * (1.0 + rim));
    const double expected = gamma * (1.0 + cfg.beta()) * omega * T;
    CHECK(got == doctest::Approx(expected).epsilon(1e-12));

    const double got_co = rotint::dynamical_phase(
        p, omega, ModeDirection::CoRotating, cfg.radius, cfg.refractive_index,
        T);
    CHECK(got_co ==
          doctest::Approx(gamma * (1.0 - cfg.beta()) * omega * T)
              .epsilon(1e-12));
  }
  SUBCASE("linear ramp matches the analytic integral") {
    // Omega(t) = Omega0 + (Omega1 - Omega0) t / T; at desk speeds Gamma = 1
    // to 1e-16, so phi = omega (T + s r (Omega0 + Omega1) T / (2 n c)).
    const double w0 = 2.0 * std::numbers::pi;
    const double w1 = 6.0 * std::numbers::pi;
    const RotationProfile ramp =
        RotationProfile::piecewise_linear({{0.0, w0}, {T, w1}});
    const double got = rotint::dynamical_phase(
        ramp, omega, ModeDirection::CounterRotating, cfg.radius,
        cfg.refractive_index, T);
    const double expected =
        omega * (T + cfg.radius * (w0 + w1) * T /
                         (2.0 * cfg.refractive_index * rotint::speed_of_light));
    CHECK(got == doctest::Approx(expected).epsilon(1e-10));
  }
  SUBCASE("superluminal profile throws") {
    const RotationProfile wild = RotationProfile::from_function(
        [&](double t) { return t > T / 2 ? 2.0 * rotint::speed_of_light : 0.0; });
    CHECK_THROWS_AS(
        rotint::dynamical_phase(wild, omega, ModeDirection::CounterRotating,
                                1.0, 1.0, T),
        rotint::superluminal_error);
  }
}
