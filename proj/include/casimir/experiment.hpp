#pragma once

// Torsional micro-oscillator: resonance shift under a force gradient.
// No instrument constants are built in; all three are user inputs.

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

struct OscillatorParams {
  double omega_0;   // rad/s
  double b;         // lever arm, m
  double moment_I;  // kg m^2

  void validate() const {
    if (!(omega_0 > 0.0) || !std::isfinite(omega_0)) throw DomainError("oscillator: omega_0 must be positive");
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("oscillator: lever arm b must be positive");
    if (!(moment_I > 0.0) || !std::isfinite(moment_I)) throw DomainError("oscillator: moment of inertia must be positive");
  }
  /// b^2 / (I omega_0^2), in m/N.
  double shift_factor() const { return b * b / (moment_I * omega_0 * omega_0); }
};

/// Static-mode force resolution of the oscillator (N).
inline constexpr double static_force_floor = 0.1e-12;

/// omega_res = omega_0 (1 - b^2 / (I omega_0^2) dF/da).
inline double resonant_frequency(const OscillatorParams& osc, double grad) {
  osc.validate();
  const double shift = osc.shift_factor() * grad;
  if (!(std::abs(shift) < 1.0)) throw DomainError("resonant_frequency: shift factor reaches 1, oscillator unstable");
  return osc.omega_0 * (1.0 - shift);
}

inline double infer_gradient(const OscillatorParams& osc, double omega_res) {
  osc.validate();
  if (!(omega_res > 0.0)) throw DomainError("infer_gradient: omega_res must be positive");
  return (1.0 - omega_res / osc.omega_0) / osc.shift_factor();
}

struct SensitivityFloor {
  double gradient;  // N/m
  double force;     // N
};

/// Smallest gradient resolved with a frequency resolution df_res (Hz).
inline SensitivityFloor sensitivity_floor(const OscillatorParams& osc, double df_res) {
  osc.validate();
  if (!(df_res >= 0.0)) throw DomainError("sensitivity_floor: frequency resolution must be >= 0");
  return {2.0 * constants::pi * df_res / osc.omega_0 / osc.shift_factor(), static_force_floor};
}

}  // namespace casimir
