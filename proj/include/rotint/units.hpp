#pragma once

namespace rotint {

// Core types use angular frequency (rad/s) exclusively; wavelength (nm)
// appears only at the CLI / provenance boundary. These are the two-way
// conversions used there.

// w = 2 pi c / lambda.
double angular_frequency_from_wavelength_nm(double wavelength_nm);
double wavelength_nm_from_angular_frequency(double omega);

// First-order bandwidth conversion about a carrier:
// sigma_w = 2 pi c sigma_lambda / lambda^2.
double bandwidth_from_wavelength_nm(double sigma_nm, double wavelength_nm);
double bandwidth_nm_from_angular_frequency(double sigma_omega,
                                           double wavelength_nm);

}  // namespace rotint
