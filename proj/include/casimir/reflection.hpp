#pragma once

// Fresnel reflection coefficients on the imaginary frequency axis in the
// dimensionless variables v = 2 q a and zeta = xi / omega_c, omega_c = c/(2a).

#include <cmath>
#include <variant>

#include "casimir/dielectric.hpp"
#include "casimir/errors.hpp"

namespace casimir {

struct DimensionlessPoint {
  double v;
  double zeta;
};

struct ReflectionPair {
  double r_tm;
  double r_te;
};

/// r_TM = (eps v - s)/(eps v + s), r_TE = (v - s)/(v + s),
/// s = sqrt(v^2 + (eps - 1) zeta^2).
///
/// Both numerators are rationalised, (eps v)^2 - s^2 = (eps-1)((eps+1)v^2 - zeta^2)
/// and v^2 - s^2 = -(eps-1) zeta^2, so neither coefficient loses digits when
/// eps is close to 1 or very large.
inline ReflectionPair fresnel(DimensionlessPoint p, double eps) {
  if (!(eps >= 1.0)) throw DomainError("fresnel: eps must be >= 1");
  if (!(p.zeta >= 0.0) || !(p.v >= p.zeta) || !(p.v > 0.0)) {
    throw DomainError("fresnel: need v >= zeta >= 0 and v > 0");
  }
  const double chi = eps - 1.0;
  const double v2 = p.v * p.v;
  const double z2 = p.zeta * p.zeta;
  const double s = std::sqrt(v2 + chi * z2);
  const double dtm = eps * p.v + s;
  const double dte = p.v + s;
  return {chi * ((eps + 1.0) * v2 - z2) / (dtm * dtm), -chi * z2 / (dte * dte)};
}

/// Reflection coefficients at the zero Matsubara frequency.
inline ReflectionPair zero_frequency_pair(const ZeroFreqBehavior& behavior, double v) {
  if (!(v > 0.0)) throw DomainError("zero_frequency_pair: v must be positive");
  struct Visitor {
    double v;
    ReflectionPair operator()(const zero_freq::IdealMetal&) const { return {1.0, -1.0}; }
    ReflectionPair operator()(const zero_freq::DrudeLike&) const { return {1.0, 0.0}; }
    ReflectionPair operator()(const zero_freq::Dielectric& d) const { return {d.r0, 0.0}; }
    ReflectionPair operator()(const zero_freq::PlasmaLike& p) const {
      // -(x - sqrt(x^2+1))^2 = -1 / (x + sqrt(x^2+1))^2
      const double x = p.alpha * v;
      const double d = x + std::sqrt(x * x + 1.0);
      return {1.0, -1.0 / (d * d)};
    }
  };
  return std::visit(Visitor{v}, behavior);
}

}  // namespace casimir
