#include "rotint/kinematics.hpp"

#include <cmath>
#include <numbers>

#include "rotint/constants.hpp"
#include "rotint/errors.hpp"

namespace rotint {

namespace {
constexpr double pi = std::numbers::pi;
}

PlatformConfig PlatformConfig::from_area(double area, int windings,
                                         double refractive_index,
                                         double rotation_frequency_hz) {
  if (!(area > 0.0)) {
    throw validation_error("PlatformConfig: area must be positive");
  }
  if (windings < 1) {
    throw validation_error("PlatformConfig: windings must be >= 1");
  }
  PlatformConfig cfg;
  cfg.radius = std::sqrt(area / (static_cast<double>(windings) * pi));
  cfg.windings = windings;
  cfg.refractive_index = refractive_index;
  cfg.angular_frequency = 2.0 * pi * rotation_frequency_hz;
  cfg.validate();
  return cfg;
}

double PlatformConfig::rotation_frequency() const {
  return angular_frequency / (2.0 * pi);
}

double PlatformConfig::rim_speed() const { return radius * angular_frequency; }

double PlatformConfig::path_length() const {
  return 2.0 * pi * radius * static_cast<double>(windings);
}

double PlatformConfig::area() const {
  return static_cast<double>(windings) * pi * radius * radius;
}

double PlatformConfig::beta() const {
  return rim_speed() / (refractive_index * speed_of_light);
}

double PlatformConfig::rim_beta() const { return rim_speed() / speed_of_light; }

double PlatformConfig::propagation_time() const {
  return path_length() * refractive_index / speed_of_light;
}

void PlatformConfig::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw validation_error("PlatformConfig: radius must be positive");
  }
  if (windings < 1) {
    throw validation_error("PlatformConfig: windings must be >= 1");
  }
  if (!(refractive_index >= 1.0)) {
    throw validation_error("PlatformConfig: refractive index must be >= 1");
  }
  if (!std::isfinite(angular_frequency)) {
    throw validation_error("PlatformConfig: angular frequency must be finite");
  }
  if (std::abs(rim_speed()) >= speed_of_light) {
    throw superluminal_error(rim_speed());
  }
}

double lorentz_gamma(const PlatformConfig& cfg) {
  cfg.validate();
  const double b = cfg.rim_beta();
  return 1.0 / std::sqrt((1.0 - b) * (1.0 + b));
}

DragVelocities drag_velocities(const PlatformConfig& cfg) {
  cfg.validate();
  const double n = cfg.refractive_index;
  const double v = cfg.rim_speed();
  const double cn = speed_of_light / n;
  const double alpha = 1.0 - 1.0 / (n * n);
  DragVelocities d;
  d.u_plus = (cn + v) / (1.0 + v / (n * speed_of_light));
  d.u_minus = (-cn + v) / (1.0 - v / (n * speed_of_light));
  d.first_order_plus = cn + alpha * v;
  d.first_order_minus = -cn + alpha * v;
  d.drag_coefficient = alpha;
  return d;
}

ArrivalTimes arrival_times(const PlatformConfig& cfg) {
  const DragVelocities d = drag_velocities(cfg);
  const double L = cfg.path_length();
  const double n = cfg.refractive_index;
  const double v = cfg.rim_speed();

  // The "+" signal chases the receding detector at closing speed u(+) - v;
  // the "-" signal (negative velocity for ordinary media) is met by the
  // detector at closing speed v - u(-). Both closing speeds are positive
  // for every configuration that passes validate(); the guard is defensive.
  const double closing_plus = d.u_plus - v;
  const double closing_minus = v - d.u_minus;
  if (!(closing_plus > 0.0) || !(closing_minus > 0.0)) {
    throw validation_error(
        "arrival_times: degenerate geometry, signal never closes the loop");
  }

  ArrivalTimes t;
  t.t_plus = L / closing_plus;
  t.t_minus = L / closing_minus;

  const double transit = L / speed_of_light * n;
  const double lag = L * v / speed_of_light_sq;
  t.first_order_plus = transit + lag;
  t.first_order_minus = transit - lag;
  t.initial_plus = transit - lag * d.drag_coefficient * n * n;
  t.initial_minus = transit + lag * d.drag_coefficient * n * n;
  return t;
}

double sagnac_delay(double area, double rotation_frequency_hz) {
  if (!(area > 0.0)) {
    throw validation_error("sagnac_delay: area must be positive");
  }
  return 8.0 * pi * area * rotation_frequency_hz / speed_of_light_sq;
}

double first_order_sagnac_delay(const PlatformConfig& cfg) {
  return 2.0 * cfg.path_length() * cfg.rim_speed() / speed_of_light_sq;
}

KinematicsReport kinematics_report(const PlatformConfig& cfg) {
  cfg.validate();
  const DragVelocities d = drag_velocities(cfg);
  const ArrivalTimes t = arrival_times(cfg);
  KinematicsReport r;
  r.beta = cfg.beta();
  r.gamma = lorentz_gamma(cfg);
  r.path_length = cfg.path_length();
  r.area = cfg.area();
  r.u_plus = d.u_plus;
  r.u_minus = d.u_minus;
  r.t_a_plus = t.t_plus;
  r.t_a_minus = t.t_minus;
  r.sagnac = sagnac_delay(cfg.area(), cfg.rotation_frequency());
  return r;
}

}  // namespace rotint
