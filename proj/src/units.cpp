#include "rotint/units.hpp"

#include <numbers>

#include "rotint/constants.hpp"
#include "rotint/errors.hpp"

namespace rotint {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0)) {
    throw validation_error(std::string(what) + " must be positive");
  }
}

}  // namespace

double angular_frequency_from_wavelength_nm(double wavelength_nm) {
  require_positive(wavelength_nm, "wavelength");
  return 2.0 * std::numbers::pi * speed_of_light / (wavelength_nm * 1e-9);
}

double wavelength_nm_from_angular_frequency(double omega) {
  require_positive(omega, "angular frequency");
  return 2.0 * std::numbers::pi * speed_of_light / omega * 1e9;
}

double bandwidth_from_wavelength_nm(double sigma_nm, double wavelength_nm) {
  require_positive(sigma_nm, "bandwidth");
  require_positive(wavelength_nm, "wavelength");
  const double lambda = wavelength_nm * 1e-9;
  return 2.0 * std::numbers::pi * speed_of_light * (sigma_nm * 1e-9) /
         (lambda * lambda);
}

double bandwidth_nm_from_angular_frequency(double sigma_omega,
                                           double wavelength_nm) {
  require_positive(sigma_omega, "bandwidth");
  require_positive(wavelength_nm, "wavelength");
  const double lambda = wavelength_nm * 1e-9;
  return sigma_omega * lambda * lambda /
         (2.0 * std::numbers::pi * speed_of_light) * 1e9;
}

}  // namespace rotint
