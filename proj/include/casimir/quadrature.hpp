#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "casimir/errors.hpp"

namespace casimir {

/// Tolerances and truncation policy shared by every numerical operation.
struct QuadratureSpec {
  double rel_tol = 1e-9;
  int max_matsubara = 100000;  // hard cap on the number of Matsubara terms
  unsigned max_depth = 18;     // bisection depth of the adaptive panels
  bool parallel = false;       // evaluate Matsubara terms on worker threads
  unsigned threads = 0;        // 0 = hardware concurrency

  void validate() const {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-4)) {
      throw DomainError("QuadratureSpec: rel_tol must lie in (0, 1e-4], got " + std::to_string(rel_tol));
    }
    if (max_matsubara < 1) throw DomainError("QuadratureSpec: max_matsubara must be positive");
  }
};

struct QuadratureValue {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive 21-point Gauss-Kronrod on a finite interval.
template <class F>
QuadratureValue integrate(const F& f, double lo, double hi, double rel_tol, unsigned max_depth = 18) {
  if (!(hi > lo)) return {};
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(
      f, lo, hi, max_depth, rel_tol, &err);
  return {v, err};
}

/// Upper cut for an integrand bounded by w^p e^{-rate w} on [lo, inf): the
/// envelope tail beyond the cut is below `rel_tol` times the envelope mass
/// on [lo, inf).
inline double envelope_cut(double lo, double power, double rate, double rel_tol) {
  const double a = power + 1.0;
  const double x0 = rate * lo;
  const double q0 = boost::math::gamma_q(a, x0);
  const double target = std::max(rel_tol * q0, 1e-300);
  double x = boost::math::gamma_q_inv(a, target);
  x = std::max(x, x0 + 1.0);
  return x / rate;
}

/// Integral over [lo, inf) of an integrand that decays like w^p e^{-rate w}.
/// The range is truncated with `envelope_cut` and split into panels of
/// growing width so the adaptive rule resolves the peak near `lo`.
template <class F>
QuadratureValue integrate_decaying(const F& f, double lo, double power, double rate, double rel_tol,
                                   unsigned max_depth = 18) {
  const double hi = envelope_cut(lo, power, rate, 0.01 * rel_tol);
  constexpr std::array<double, 5> offsets{0.25, 1.0, 4.0, 12.0, 32.0};
  QuadratureValue total;
  double a = lo;
  for (double off : offsets) {
    const double b = lo + off / rate;
    if (b >= hi) break;
    const auto part = integrate(f, a, b, rel_tol, max_depth);
    total.value += part.value;
    total.error += part.error;
    a = b;
  }
  const auto last = integrate(f, a, hi, rel_tol, max_depth);
  total.value += last.value;
  total.error += last.error;
  return total;
}

}  // namespace casimir
