#include <cmath>
#include <numbers>

#include <doctest.h>

#include "rotint/constants.hpp"
#include "rotint/detection.hpp"
#include "rotint/errors.hpp"
#include "rotint/interferometer.hpp"
#include "rotint/kinematics.hpp"
#include "rotint/spectra.hpp"

using rotint::CoincidenceClass;
using rotint::GaussianConvention;
using rotint::GaussianSpec;
using rotint::PlatformConfig;

namespace {

constexpr double kMu = 2.36e15;

// Sagnac delay of the 22.7 m^2 bench at 1 Hz, 8 pi A / c^2.
constexpr double kBenchDelay = 6.347815727679603e-15;

}  // namespace

TEST_CASE("single-photon closed form") {
  SUBCASE("at rest everything reaches detector c") {
    const auto [pc, pd] = rotint::p1_sagnac_closed(kMu, 22.7, 0.0);
    CHECK(pc == doctest::Approx(1.0));
    CHECK(pd == doctest::Approx(0.0));
  }
  SUBCASE("half-period rotation swaps the ports") {
    // mu t_s = pi at f = c^2 / (8 A mu).
    const double f = rotint::speed_of_light_sq / (8.0 * 22.7 * kMu);
    const auto [pc, pd] = rotint::p1_sagnac_closed(kMu, 22.7, f);
    CHECK(pc == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(pd == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("benchmark value at 1 Hz") {
    const auto [pc, pd] = rotint::p1_sagnac_closed(kMu, 22.7, 1.0);
    const double expected = 0.5 * (1.0 + std::cos(kMu * kBenchDelay));
    CHECK(pc == doctest::Approx(expected).epsilon(1e-14));
    CHECK(pc == doctest::Approx(0.12645343841492507).epsilon(1e-14));
    CHECK(pc + pd == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("quadrature p1 requires a physical state") {
  const GaussianSpec photon{kMu, 2.36e11, GaussianConvention::AmplitudeStd};
  const PlatformConfig cfg = PlatformConfig::from_area(22.7, 35, 1.45, 1.0);
  auto state = rotint::build_quantum_sagnac(cfg, photon);

  const auto good = rotint::p1(state);
  CHECK(good.p_c + good.p_d == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(good.p_c == doctest::Approx(good.raw_p_c).epsilon(1e-12));

  SUBCASE("unnormalized input") {
    for (auto& v : state.mode_a.values) {
      v *= 1.2;
    }
    CHECK_THROWS_AS(rotint::p1(state), rotint::unnormalized_state_error);
  }
  SUBCASE("axis mismatch") {
    state.mode_b.axis.start *= 1.0 + 1e-6;
    CHECK_THROWS_AS(rotint::p1(state), rotint::validation_error);
  }
}

TEST_CASE("independent-pair dip closed form") {
  const double s = 1.47e13;  // intensity std
  SUBCASE("bottom of the dip is exactly zero") {
    CHECK(rotint::p2_hom_closed(s, kBenchDelay, kBenchDelay) == 0.0);
    CHECK(rotint::p2_hom_closed(s, 0.0, 0.0) == 0.0);
  }
  SUBCASE("symmetric in the residual delay") {
    const double d = 3e-14;
    CHECK(rotint::p2_hom_closed(s, kBenchDelay, kBenchDelay + d) ==
          doctest::Approx(rotint::p2_hom_closed(s, kBenchDelay,
                                                kBenchDelay - d))
              .epsilon(1e-15));
  }
  SUBCASE("one sigma of residual delay") {
    const double expected = 0.5 - 0.5 * std::exp(-1.0);
    CHECK(rotint::p2_hom_closed(s, 0.0, 1.0 / s) ==
          doctest::Approx(expected).epsilon(1e-14));
  }
  SUBCASE("large separation saturates at one half") {
    CHECK(rotint::p2_hom_closed(s, 0.0, 1e-9) ==
          doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("correlated-pair closed form") {
  const double s = 1.47e13;  // amplitude std
  SUBCASE("no rotation, no coincidences") {
    CHECK(rotint::p2_reveal_conceal_closed(kMu, s, 0.0) == 0.0);
  }
  SUBCASE("benchmark value at 1 Hz") {
    CHECK(rotint::p2_reveal_conceal_closed(kMu, s, kBenchDelay) ==
          doctest::Approx(0.004280497836387439).epsilon(1e-14));
    // Same number from the printed formula, assembled by hand.
    const double eps = std::exp(-s * s * kBenchDelay * kBenchDelay / 8.0);
    const double byhand = (1.0 - std::pow(eps, 4)) /
                          (4.0 * (1.0 + std::cos(kMu * kBenchDelay) * eps));
    CHECK(rotint::p2_reveal_conceal_closed(kMu, s, kBenchDelay) ==
          doctest::Approx(byhand).epsilon(1e-14));
  }
  SUBCASE("strong dephasing tends to the classical quarter") {
    const double t_s = 100.0 / s;  // sigma t_s = 100
    CHECK(rotint::p2_reveal_conceal_closed(kMu, s, t_s) ==
          doctest::Approx(0.25).epsilon(1e-10));
  }
  SUBCASE("vanishing denominator throws") {
    // mu t_s = pi with nearly no dephasing: 1 + cos(mu t_s) eps ~ 0.
    const double t_s = std::numbers::pi / kMu;
    CHECK_THROWS_AS(rotint::p2_reveal_conceal_closed(kMu, 1.0, t_s),
                    rotint::singular_denominator_error);
  }
}

TEST_CASE("coincidence classification") {
  SUBCASE("bands") {
    const auto low = rotint::classify(0.1);
    CHECK(low.band == CoincidenceClass::Coalescence);
    CHECK_FALSE(low.entanglement_witness);

    const auto mid = rotint::classify(0.4);
    CHECK(mid.band == CoincidenceClass::ClassicalRange);
    CHECK_FALSE(mid.entanglement_witness);

    const auto high = rotint::classify(0.7);
    CHECK(high.band == CoincidenceClass::AntiCoalescence);
    CHECK(high.entanglement_witness);
  }
  SUBCASE("boundaries are inclusive for the classical range") {
    CHECK(rotint::classify(0.25).band == CoincidenceClass::ClassicalRange);
    CHECK(rotint::classify(0.5).band == CoincidenceClass::ClassicalRange);
    CHECK_FALSE(rotint::classify(0.5).entanglement_witness);
    CHECK(rotint::classify(std::nextafter(0.5, 1.0)).band ==
          CoincidenceClass::AntiCoalescence);
    CHECK(rotint::classify(std::nextafter(0.25, 0.0)).band ==
          CoincidenceClass::Coalescence);
    CHECK(rotint::classify(0.0).band == CoincidenceClass::Coalescence);
    CHECK(rotint::classify(1.0).band == CoincidenceClass::AntiCoalescence);
  }
  SUBCASE("out-of-range probabilities are rejected") {
    CHECK_THROWS_AS(rotint::classify(-0.01), rotint::validation_error);
    CHECK_THROWS_AS(rotint::classify(1.01), rotint::validation_error);
  }
  SUBCASE("band names") {
    CHECK(rotint::to_string(CoincidenceClass::Coalescence) == "Coalescence");
    CHECK(rotint::to_string(CoincidenceClass::ClassicalRange) ==
          "ClassicalRange");
    CHECK(rotint::to_string(CoincidenceClass::AntiCoalescence) ==
          "AntiCoalescence");
  }
}

TEST_CASE("quadrature p2 guards") {
  const GaussianSpec photon{kMu, 1.47e13, GaussianConvention::AmplitudeStd};
  auto psi = rotint::TwoPhotonSpectrum::correlated_gaussian(photon);
  CHECK_NOTHROW(rotint::p2(psi));

  for (auto& v : psi.correlated().values) {
    v *= 0.9;
  }
  CHECK_THROWS_AS(rotint::p2(psi), rotint::unnormalized_state_error);
}
