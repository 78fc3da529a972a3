#pragma once

namespace rotint {

// CODATA exact value, m/s.
inline constexpr double speed_of_light = 299792458.0;
inline constexpr double speed_of_light_sq = speed_of_light * speed_of_light;

inline constexpr const char* version_string = "0.1.0";

// Numerical guard thresholds used across the library. These are part of the
// documented behaviour (they decide when an exception is thrown), not tuning
// knobs, so they live here rather than as magic numbers at call sites.
namespace guards {

// A state fed to an interference formula must be normalized this well.
inline constexpr double norm_tolerance = 1e-6;

// Minimum surviving probability after the lossy loop filter; below this the
// spectrum is considered annihilated and renormalizing it is meaningless.
inline constexpr double survival_floor = 1e-13;

// Closed-form coincidence denominators smaller than this are singular.
inline constexpr double denominator_floor = 1e-12;

// A two-photon exchange overlap must be real; larger imaginary residue
// indicates a corrupted grid rather than quadrature noise.
inline constexpr double swap_imaginary_residue = 1e-10;

// Quadrature probabilities may stray this far outside [0, 1] before the
// result is treated as an error instead of being clamped.
inline constexpr double probability_slack = 1e-8;

}  // namespace guards

}  // namespace rotint
