#pragma once

// Finite-length (edge) corrections for ideal metals at T = 0 and the combined
// PFA error budget. These are error-scale estimates, not real-material forces.

#include <algorithm>
#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/core.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace edge {

/// Edge coefficient from world-line numerics (Dirichlet scalar).
inline constexpr double gamma_a = 5.23e-3;

inline constexpr double pi2 = constants::pi * constants::pi;
inline constexpr double pi3 = pi2 * constants::pi;

/// 1152 gamma_a / pi^2, relative edge correction per a/L (force).
inline constexpr double C_ed = 1152.0 * gamma_a / pi2;
/// Gradient counterpart, (5/7) C_ed.
inline constexpr double C_ed_gradient = 5.0 / 7.0 * C_ed;
/// Exact infinite-cylinder beyond-PFA coefficient, 4/pi^2 - 7/60.
inline constexpr double C_ex = 4.0 / pi2 - 7.0 / 60.0;
inline constexpr double C_ex_gradient = 5.0 / 7.0 * C_ex;

}  // namespace edge

/// Plate of area S with edges of length l_edge at separation z.
/// Scalar Dirichlet: -pi^2 hbar c S / (480 z^4) - gamma_a hbar c l_edge / z^3;
/// the electromagnetic flag doubles both terms.
inline double finite_plate_force(double S, double l_edge, double z, bool em) {
  if (!(z > 0.0)) throw DomainError("finite_plate_force: separation must be positive");
  if (!(S > 0.0)) throw DomainError("finite_plate_force: area must be positive");
  if (!(l_edge >= 0.0)) throw DomainError("finite_plate_force: edge length must be >= 0");
  const double hc = constants::hbar_c;
  const double f = -edge::pi2 * hc * S / (480.0 * z * z * z * z) - edge::gamma_a * hc * l_edge / (z * z * z);
  return em ? 2.0 * f : f;
}

inline double edge_corrected_force(const Geometry& g) {
  g.validate();
  return ideal_force_zero_temperature(g) * (1.0 + edge::C_ed * g.a / g.L);
}

inline double edge_corrected_gradient(const Geometry& g) {
  g.validate();
  return ideal_gradient_zero_temperature(g) * (1.0 + edge::C_ed_gradient * g.a / g.L);
}

/// 95% confidence total PFA error for a finite cylinder: beyond-PFA and edge
/// errors treated as uniform random quantities.
inline double total_pfa_error(const Geometry& g, Quantity which) {
  g.validate();
  const bool force = which == Quantity::force;
  const double e1 = (force ? edge::C_ex : edge::C_ex_gradient) * g.a / g.R;
  const double e2 = (force ? edge::C_ed : edge::C_ed_gradient) * g.a / g.L;
  return std::min(e1 + e2, 1.1 * std::hypot(e1, e2));
}

struct EdgeParams {
  double L1;  // axis projection to plate edge (m)
  double gamma_a = edge::gamma_a;

  double H(double R) const { return R - std::sqrt(R * R - L1 * L1); }
};

inline double overhang_f1(double z) {
  if (!(z >= 0.0 && z <= 1.0)) throw DomainError("overhang_f1: z must lie in [0, 1]");
  const double z2 = z * z;
  const double z4 = z2 * z2;
  const double z7 = z4 * z2 * z;
  return 120.0 - 168.0 * z2 + 35.0 * z4 + 13.0 * z7 +
         4.0 * std::sqrt(1.0 - z2) * (30.0 - 27.0 * z2 - z4 - 2.0 * z4 * z2);
}

inline double overhang_f2(double z) {
  if (!(z >= 0.0 && z <= 1.0)) throw DomainError("overhang_f2: z must lie in [0, 1]");
  const double z2 = z * z;
  const double z4 = z2 * z2;
  return 4.0 - 5.0 * z2 + z4 * z + std::sqrt(1.0 - z2) * (4.0 - 3.0 * z2 - z4);
}

inline double overhang_f(double L1, double R, double L, double gamma_a = edge::gamma_a) {
  const double z = L1 / R;
  const double s2 = std::sqrt(2.0);
  return 8.0 * s2 / (525.0 * constants::pi) * std::pow(R / L1, 4) * overhang_f1(z) +
         1536.0 * s2 * gamma_a / (5.0 * edge::pi3) * R * R * R / (L * L1 * L1) * overhang_f2(z);
}

struct OverhangResult {
  double value = 0.0;          // N
  double extra_terms = 0.0;    // signed relative contribution beyond (1 + C_ed a/L)
  double cut_term = 0.0;       // -f sqrt(a/R) a^3/L1^3
  double boundary_term = 0.0;  // 768 sqrt2 gamma_a/pi^3 sqrt(a/R) a^3/H^3
  bool warning = false;        // L1 or H below 20 a
};

/// Cylinder whose axis projection lies L1 <= R from the plate edge.
inline OverhangResult overhang_force(const Geometry& g, const EdgeParams& p) {
  g.validate();
  if (!(p.L1 > 0.0)) throw DomainError("overhang_force: L1 must be positive");
  if (p.L1 > g.R) throw DomainError("overhang_force: L1 must not exceed R");
  OverhangResult r;
  const double H = p.H(g.R);
  const double root = std::sqrt(g.a / g.R);
  const double a3 = g.a * g.a * g.a;
  r.cut_term = -overhang_f(p.L1, g.R, g.L, p.gamma_a) * root * a3 / (p.L1 * p.L1 * p.L1);
  if (p.L1 < g.R) {
    // at L1 = R this is O(a^3/R^3), below PFA accuracy
    r.boundary_term = 768.0 * std::sqrt(2.0) * p.gamma_a / edge::pi3 * root * a3 / (H * H * H);
  }
  r.extra_terms = r.cut_term + r.boundary_term;
  r.value = ideal_force_zero_temperature(g) * (1.0 + edge::C_ed * g.a / g.L + r.extra_terms);
  r.warning = p.L1 < 20.0 * g.a || H < 20.0 * g.a;
  return r;
}

}  // namespace casimir
