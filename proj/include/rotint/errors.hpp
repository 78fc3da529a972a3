#pragma once

#include <stdexcept>
#include <string>

namespace rotint {

// Bad configuration or bad input data. The CLI maps these to exit code 1.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rim speed at or above c; a special validation failure worth its own type
// because both kinematics and evolution can hit it.
class superluminal_error : public validation_error {
 public:
  explicit superluminal_error(double rim_speed)
      : validation_error("rim speed " + std::to_string(rim_speed) +
                         " m/s is not below the speed of light") {}
};

// A numerical guard tripped mid-computation (valid inputs, degenerate
// numbers). The CLI maps these to exit code 2.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The loop filter (or a normalization request) annihilated the state.
class zero_norm_error : public numerical_error {
 public:
  using numerical_error::numerical_error;
};

// A routine that requires a normalized state received one that is not.
class unnormalized_state_error : public numerical_error {
 public:
  using numerical_error::numerical_error;
};

// A closed-form expression hit a vanishing denominator.
class singular_denominator_error : public numerical_error {
 public:
  using numerical_error::numerical_error;
};

}  // namespace rotint
