#pragma once

namespace rotint {

// Geometry and rotation state of a multi-winding fibre loop on a rotating
// platform. Counter-propagating signals are labelled "+" (against the
// rotation, the longer lab-frame path when angular_frequency > 0) and "-"
// (with the rotation). Negative angular_frequency flips the roles.
struct PlatformConfig {
  double radius = 0.0;             // loop radius, m
  int windings = 1;                // number of fibre windings N
  double refractive_index = 1.0;   // co-moving medium index n >= 1
  double angular_frequency = 0.0;  // platform Omega, rad/s, signed

  // Convenience constructor that back-solves the radius from an enclosed
  // area A = N pi r^2 and takes the rotation rate in Hz.
  static PlatformConfig from_area(double area, int windings,
                                  double refractive_index,
                                  double rotation_frequency_hz);

  double rotation_frequency() const;  // Hz, Omega / (2 pi)
  double rim_speed() const;           // v = r Omega, m/s, signed
  double path_length() const;         // L = 2 pi r N, m
  double area() const;                // A = N pi r^2, m^2
  double beta() const;                // r Omega / (n c)
  double rim_beta() const;            // r Omega / c
  double propagation_time() const;    // t_f = L n / c, s (at rest)

  // Throws validation_error (or superluminal_error) on:
  // radius <= 0, windings < 1, refractive_index < 1, |r Omega| >= c.
  void validate() const;
};

// Time dilation factor of the rim, 1 / sqrt(1 - (r Omega / c)^2).
// Throws superluminal_error when |r Omega| >= c.
double lorentz_gamma(const PlatformConfig& cfg);

// Lab-frame signal velocities in the co-moving medium (Fresnel drag).
struct DragVelocities {
  double u_plus;   // exact ( c/n + v) / (1 + v/(n c)), signed, m/s
  double u_minus;  // exact (-c/n + v) / (1 - v/(n c)), signed, m/s
  double first_order_plus;   //  c/n + alpha v
  double first_order_minus;  // -c/n + alpha v
  double drag_coefficient;   // alpha = 1 - 1/n^2
};

DragVelocities drag_velocities(const PlatformConfig& cfg);

// Lab-frame propagation times around the loop. The "+" signal chases a
// receding detector, the "-" signal meets an approaching one:
//   t_a(+-) = L / (|u(+-)| -+ v).
struct ArrivalTimes {
  double t_plus;   // exact arrival time, s
  double t_minus;  // exact arrival time, s
  double first_order_plus;   // (L/c) n + L v / c^2
  double first_order_minus;  // (L/c) n - L v / c^2
  // First-order initial time-distances L / |u(+-)|, i.e. the flight times
  // before the emission/detection offsets are accounted for:
  //   t_i(+-) ~= (L/c) n -+ (v L / c^2) alpha n^2.
  double initial_plus;
  double initial_minus;
};

// Throws validation_error if either effective closing speed |u| -+ v is
// not positive (a degenerate geometry where the signal never arrives).
ArrivalTimes arrival_times(const PlatformConfig& cfg);

// Sagnac delay t_s = 8 pi A f / c^2 for enclosed area A (m^2) and rotation
// frequency f (Hz). Valid for any sign of f.
double sagnac_delay(double area, double rotation_frequency_hz);

// Equivalent first-order form 2 L v / c^2; independent of the medium.
double first_order_sagnac_delay(const PlatformConfig& cfg);

// One-stop summary used by the CLI `kinematics` subcommand.
struct KinematicsReport {
  double beta;
  double gamma;
  double path_length;  // m
  double area;         // m^2
  double u_plus;       // m/s (exact)
  double u_minus;      // m/s (exact)
  double t_a_plus;     // s (exact)
  double t_a_minus;    // s (exact)
  double sagnac;       // s, 8 pi A f / c^2
};

KinematicsReport kinematics_report(const PlatformConfig& cfg);

}  // namespace rotint
