#pragma once

#include <string>
#include <utility>

#include "rotint/spectra.hpp"

namespace rotint {

// Single-photon detection probabilities behind the balanced splitter,
// computed from the pre-splitter state via the interference integral
//   P_{c,d} = 1/2 +- Re integral conj(psi_a) psi_b dw.
// `raw_*` keep the unclamped quadrature values; p_c / p_d are clamped to
// [0, 1]. Values outside [0 - slack, 1 + slack] throw numerical_error.
struct OnePhotonResult {
  double p_c;
  double p_d;
  double raw_p_c;
  double raw_p_d;
};

// Requires joint normalization within the norm guard
// (unnormalized_state_error otherwise) and a shared axis.
OnePhotonResult p1(const OnePhotonState& state);

// Narrowband closed form: (P_c, P_d) = ((1 + cos(mu t_s))/2,
// (1 - cos(mu t_s))/2) with t_s = 8 pi A f / c^2.
std::pair<double, double> p1_sagnac_closed(double mean_frequency, double area,
                                           double rotation_frequency_hz);

// Coincidence probability behind the splitter,
//   P2 = 1/2 - 1/2 Re <psi|Swap|psi>,
// with the same clamping/raw convention as above. The exchange overlap must
// be real within the guard residue (numerical_error otherwise); input must
// be normalized.
struct TwoPhotonResult {
  double p2;
  double raw_p2;
};

TwoPhotonResult p2(const TwoPhotonSpectrum& psi);

// Independent-photon dip: 1/2 - 1/2 exp(-sigma^2 (t_s - delay)^2), with
// sigma the *intensity* std of the photons' Gaussian spectrum.
double p2_hom_closed(double intensity_std, double sagnac_delay, double delay);

// Energy-correlated pair behind the lossy loop:
//   P2 = (1 - eps^4) / (4 (1 + cos(mu t_s) eps)),
// eps = exp(-sigma^2 t_s^2 / 8), with sigma the *amplitude* std of the
// single-photon spectrum. Throws singular_denominator_error when the
// denominator falls below the guard floor.
double p2_reveal_conceal_closed(double mean_frequency, double amplitude_std,
                                double sagnac_delay);

// Interpretation bands for a coincidence probability.
enum class CoincidenceClass {
  Coalescence,      // p2 <  1/4: more bunching than any classical pair
  ClassicalRange,   // 1/4 <= p2 <= 1/2
  AntiCoalescence,  // p2 >  1/2: fermion-like, entanglement witness
};

struct Classification {
  CoincidenceClass band;
  bool entanglement_witness;  // true iff p2 > 1/2
};

// Throws validation_error when p2_value is outside [0, 1].
Classification classify(double p2_value);

std::string to_string(CoincidenceClass band);

}  // namespace rotint
