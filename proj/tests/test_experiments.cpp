#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "rotint/constants.hpp"
#include "rotint/detection.hpp"
#include "rotint/errors.hpp"
#include "rotint/experiments.hpp"
#include "rotint/kinematics.hpp"
#include "rotint/spectra.hpp"

using rotint::GaussianConvention;
using rotint::GaussianSpec;
using rotint::PlatformConfig;
using rotint::Scenario;
using rotint::SweepRange;
using rotint::SweepSpec;
using rotint::SweptParameter;

namespace {

constexpr double kMu = 2.36e15;

SweepSpec base_spec() {
  SweepSpec spec;
  spec.scenario = Scenario::RevealConceal;
  spec.swept = SweptParameter::RotationFrequency;
  spec.range = SweepRange{0.0, 2.0, 5};
  spec.platform = PlatformConfig::from_area(22.7, 35, 1.45, 0.0);
  spec.photon = GaussianSpec{kMu, 1.47e13, GaussianConvention::AmplitudeStd};
  spec.grid = rotint::GridSettings{8.0, 512};
  return spec;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

TEST_CASE("sweep range") {
  const SweepRange r{-1.0, 3.0, 5};
  CHECK(r.at(0) == doctest::Approx(-1.0));
  CHECK(r.at(2) == doctest::Approx(1.0));
  CHECK(r.at(4) == doctest::Approx(3.0));
  CHECK_THROWS_AS((SweepRange{0.0, 1.0, 1}.validate()),
                  rotint::validation_error);
  CHECK_THROWS_AS((SweepRange{1.0, 1.0, 5}.validate()),
                  rotint::validation_error);
}

TEST_CASE("scenario and parameter names") {
  CHECK(rotint::to_string(Scenario::QuantumSagnac) == "quantum-sagnac");
  CHECK(rotint::to_string(Scenario::RotatingHom) == "rotating-hom");
  CHECK(rotint::to_string(Scenario::RevealConceal) == "reveal-conceal");
  CHECK(rotint::to_string(SweptParameter::RotationFrequency) ==
        "rotation-frequency");
  CHECK(rotint::to_string(SweptParameter::Delay) == "delay");
  CHECK(rotint::to_string(SweptParameter::Bandwidth) == "bandwidth");
}

TEST_CASE("sweep spec validation") {
  SweepSpec spec = base_spec();
  CHECK_NOTHROW(spec.validate());

  SUBCASE("delay sweeps are hom-only") {
    spec.swept = SweptParameter::Delay;
    CHECK_THROWS_AS(spec.validate(), rotint::validation_error);
    spec.scenario = Scenario::RotatingHom;
    spec.range = SweepRange{-1e-13, 1e-13, 5};
    CHECK_NOTHROW(spec.validate());
  }
  SUBCASE("bandwidth sweeps must stay positive") {
    spec.swept = SweptParameter::Bandwidth;
    spec.range = SweepRange{0.0, 1e13, 5};
    CHECK_THROWS_AS(spec.validate(), rotint::validation_error);
    spec.range = SweepRange{1e12, 1e13, 5};
    CHECK_NOTHROW(spec.validate());
  }
  SUBCASE("at least one method") {
    spec.closed_form = false;
    spec.quadrature = false;
    CHECK_THROWS_AS(spec.validate(), rotint::validation_error);
  }
}

TEST_CASE("single-detector sweep rows") {
  SweepSpec spec = base_spec();
  spec.scenario = Scenario::QuantumSagnac;
  spec.photon = GaussianSpec{kMu, 2.36e11, GaussianConvention::AmplitudeStd};
  spec.quadrature = false;  // closed form only
  const auto result = rotint::run_sweep(spec);

  REQUIRE(result.rows.size() == 5);
  CHECK(result.provenance.scenario == "quantum-sagnac");
  CHECK(result.all_methods_agree());
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const auto& row = result.rows[i];
    CHECK(row.param == doctest::Approx(spec.range.at(i)));
    CHECK(row.classification == "na");  // one detector, nothing to classify
    REQUIRE(row.value_closed.has_value());
    CHECK_FALSE(row.value_quadrature.has_value());
    CHECK_FALSE(row.error.has_value());
    const double t_s = rotint::sagnac_delay(22.7, row.param);
    CHECK(*row.value_closed ==
          doctest::Approx(0.5 * (1.0 + std::cos(kMu * t_s))).epsilon(1e-12));
  }
}

TEST_CASE("two-method sweep rows agree and classify") {
  SweepSpec spec = base_spec();
  spec.scenario = Scenario::RotatingHom;
  spec.swept = SweptParameter::Delay;
  spec.photon = GaussianSpec{kMu, 1.47e13, GaussianConvention::IntensityStd};
  spec.platform = PlatformConfig::from_area(22.7, 35, 1.45, 0.0);
  const double w = 3.0 / spec.photon.intensity_std();
  spec.range = SweepRange{-w, w, 7};
  const auto result = rotint::run_sweep(spec);

  REQUIRE(result.rows.size() == 7);
  CHECK(result.all_methods_agree());
  // Center row sits at the dip bottom, edge rows near the classical 1/2.
  CHECK(result.rows[3].classification == "Coalescence");
  CHECK(*result.rows[3].value_quadrature < 1e-8);
  CHECK(result.rows[0].classification == "ClassicalRange");
  for (const auto& row : result.rows) {
    REQUIRE(row.value_closed.has_value());
    REQUIRE(row.value_quadrature.has_value());
    CHECK(std::abs(*row.value_closed - *row.value_quadrature) < 1e-6);
  }
}

TEST_CASE("bandwidth sweep varies the photon, not the platform") {
  SweepSpec spec = base_spec();
  spec.platform = PlatformConfig::from_area(22.7, 35, 1.45, 1.0);
  spec.swept = SweptParameter::Bandwidth;
  spec.range = SweepRange{1.47e13, 1.18e14, 3};
  spec.quadrature = false;
  const auto result = rotint::run_sweep(spec);
  REQUIRE(result.rows.size() == 3);
  const double t_s = rotint::sagnac_delay(22.7, 1.0);
  for (std::size_t i = 0; i < 3; ++i) {
    const double expected =
        rotint::p2_reveal_conceal_closed(kMu, spec.range.at(i), t_s);
    CHECK(*result.rows[i].value_closed ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("failing rows are recorded, not thrown") {
  SweepSpec spec = base_spec();
  spec.closed_form = false;
  // Second sample spins the rim past c (threshold ~1.05e8 Hz for this
  // radius), so its builder throws and the row must absorb the error.
  spec.range = SweepRange{1.0, 1.4e8, 2};
  const auto result = rotint::run_sweep(spec);

  REQUIRE(result.rows.size() == 2);
  CHECK_FALSE(result.rows[0].error.has_value());
  CHECK(result.rows[0].classification == "Coalescence");

  const auto& bad = result.rows[1];
  REQUIRE(bad.error.has_value());
  CHECK_FALSE(bad.error->empty());
  CHECK(bad.classification == "error");
  CHECK_FALSE(bad.value_quadrature.has_value());
  CHECK_FALSE(bad.methods_agree);
  CHECK_FALSE(result.all_methods_agree());
}

TEST_CASE("csv serialization") {
  SweepSpec spec = base_spec();
  spec.range = SweepRange{0.0, 1.0, 3};
  spec.quadrature = false;
  const auto result = rotint::run_sweep(spec);

  std::ostringstream out;
  rotint::write_csv(result, out);
  std::istringstream in(out.str());
  std::string line;

  REQUIRE(std::getline(in, line));
  CHECK(line == "param,value_closed,value_quadrature,classification");

  std::size_t rows = 0;
  while (std::getline(in, line)) {
    const auto fields = split(line, ',');
    REQUIRE(fields.size() == 4);
    CHECK(fields[2].empty());  // quadrature disabled -> empty field
    CHECK_FALSE(fields[1].empty());
    // %.17g output parses back to the exact double.
    CHECK(std::stod(fields[1]) == *result.rows[rows].value_closed);
    ++rows;
  }
  CHECK(rows == 3);
}

TEST_CASE("json serialization") {
  SweepSpec spec = base_spec();
  spec.range = SweepRange{0.0, 1.0, 3};
  const auto result = rotint::run_sweep(spec);

  std::ostringstream out;
  rotint::write_json(result, out);
  const auto doc = nlohmann::json::parse(out.str());

  const auto& prov = doc.at("provenance");
  CHECK(prov.at("scenario") == "reveal-conceal");
  CHECK(prov.at("swept") == "rotation-frequency");
  CHECK(prov.at("range").at("steps") == 3);
  CHECK(prov.at("platform").at("windings") == 35);
  CHECK(prov.at("platform").at("area_m2").get<double>() ==
        doctest::Approx(22.7).epsilon(1e-12));
  CHECK(prov.at("photon").at("mean_rad_s").get<double>() ==
        doctest::Approx(kMu));
  // The photon block quotes the bandwidth in both units.
  CHECK(prov.at("photon").at("bandwidth_rad_s").get<double>() ==
        doctest::Approx(1.47e13));
  // ~5 nm at the ~798 nm carrier implied by the 2.36e15 rad/s mean.
  CHECK(prov.at("photon").at("bandwidth_nm").get<double>() ==
        doctest::Approx(4.97).epsilon(1e-2));
  CHECK(prov.at("photon").at("convention") == "amplitude");
  CHECK(prov.at("methods").at("closed_form") == true);
  CHECK(prov.at("version") == rotint::version_string);

  const auto& rows = doc.at("rows");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].at("param").get<double>() == 0.0);
  CHECK_FALSE(rows[0].at("value_closed").is_null());
  CHECK_FALSE(rows[0].at("value_quadrature").is_null());
  CHECK(rows[0].at("methods_agree") == true);
  CHECK(rows[0].contains("error") == false);

  // Disabled method serializes as null.
  spec.quadrature = false;
  std::ostringstream closed_only;
  rotint::write_json(rotint::run_sweep(spec), closed_only);
  const auto doc2 = nlohmann::json::parse(closed_only.str());
  CHECK(doc2.at("rows")[0].at("value_quadrature").is_null());
}

TEST_CASE("reference dataset smoke check") {
  const auto datasets = rotint::fig3_dataset();
  REQUIRE(datasets.size() == 2);

  for (const auto& d : datasets) {
    CHECK(d.rows.size() == 600);
    CHECK(d.provenance.scenario == "reveal-conceal");
    CHECK(d.provenance.range.lo == 0.0);
    CHECK(d.provenance.range.hi == 3.0);
    CHECK(d.provenance.wavelength_nm == doctest::Approx(798.0).epsilon(2e-2));
    CHECK(d.all_methods_agree());
    // At rest the pair never produces a coincidence.
    CHECK(*d.rows[0].value_closed == 0.0);
    CHECK(*d.rows[0].value_quadrature < 1e-10);
  }
  CHECK(datasets[0].provenance.bandwidth == doctest::Approx(1.47e13));
  CHECK(datasets[1].provenance.bandwidth == doctest::Approx(1.18e14));

  // The narrowband curve revives above the entanglement-witness line
  // somewhere in 0..3 Hz; the broadband one stays below it.
  const auto witness = [](const rotint::SweepResult& r) {
    for (const auto& row : r.rows) {
      if (*row.value_closed > 0.5) {
        return true;
      }
    }
    return false;
  };
  CHECK(witness(datasets[0]));
}
