#pragma once

// Cylinder tilted by a small angle theta in the plane containing its axis and
// the plate normal. With a the mean minimum separation, A = theta L / (2a).

#include <cmath>

#include "casimir/core.hpp"

namespace casimir {

struct TiltParams {
  double theta = 0.0;    // rad
  double a_theta = 0.0;  // theta L / (2a)

  static TiltParams from_angle(double theta, const Geometry& g) {
    if (!(theta >= 0.0)) throw DomainError("tilt: theta must be >= 0");
    TiltParams t{theta, theta * g.L / (2.0 * g.a)};
    t.validate();
    return t;
  }
  static TiltParams from_a_theta(double a_theta, const Geometry& g) {
    TiltParams t{2.0 * a_theta * g.a / g.L, a_theta};
    t.validate();
    return t;
  }
  void validate() const {
    if (!(a_theta >= 0.0)) throw DomainError("tilt: A_theta must be >= 0");
    if (!(a_theta < 1.0)) throw DomainError("tilt: A_theta must be < 1 (cylinder end touches the plate)");
  }
};

/// Ideal-metal T = 0 tilt factor [(1-A)^{-5/2} - (1+A)^{-5/2}] / (5A).
inline double kappa(double A) {
  if (!(A >= 0.0)) throw DomainError("kappa: A_theta must be >= 0");
  if (!(A < 1.0)) throw DomainError("kappa: A_theta must be < 1");
  if (A < 1e-3) {
    const double A2 = A * A;
    return 1.0 + 21.0 / 8.0 * A2 + 3003.0 / 640.0 * A2 * A2;
  }
  return (std::pow(1.0 - A, -2.5) - std::pow(1.0 + A, -2.5)) / (5.0 * A);
}

/// Force on the tilted cylinder, Lifshitz kernel averaged over the linear gap profile.
inline ForceResult tilted_force(const Geometry& g, const ThermalState& t, const PermittivityModel& m,
                                const TiltParams& tilt, const QuadratureSpec& q = {}) {
  tilt.validate();
  return detail::evaluate_cylinder(g, t, m, {Quantity::force, tilt.a_theta}, q);
}

/// Gradient with respect to the mean separation at fixed theta.
///
/// The average over the gap profile commutes with d/da at fixed theta
/// (sinh(A n v) = sinh(n q theta L) does not depend on a), so the kernel is
/// the untilted gradient kernel with the same sinh factor.
inline ForceResult tilted_gradient(const Geometry& g, const ThermalState& t, const PermittivityModel& m,
                                   const TiltParams& tilt, const QuadratureSpec& q = {}) {
  tilt.validate();
  return detail::evaluate_cylinder(g, t, m, {Quantity::gradient, tilt.a_theta}, q);
}

/// Ratio of the tilted to the parallel force for the same model and tolerances.
inline double kappa_nm(const Geometry& g, const ThermalState& t, const PermittivityModel& m,
                       const TiltParams& tilt, const QuadratureSpec& q = {}) {
  if (tilt.a_theta == 0.0) return 1.0;
  return tilted_force(g, t, m, tilt, q).value / cylinder_force(g, t, m, q).value;
}

/// kappa(A) times the parallel force.
inline ForceResult multiplicative_force(const Geometry& g, const ThermalState& t, const PermittivityModel& m,
                                        const TiltParams& tilt, const QuadratureSpec& q = {}) {
  tilt.validate();
  ForceResult r = cylinder_force(g, t, m, q);
  const double k = kappa(tilt.a_theta);
  r.value *= k;
  r.per_length *= k;
  return r;
}

}  // namespace casimir
