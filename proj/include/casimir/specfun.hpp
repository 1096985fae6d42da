#pragma once

// Real-order polylogarithm on [0, 1) and the Riemann zeta function.
//
// Li_s(x) = sum_{n>=1} x^n / n^s is evaluated by its defining series for
// x <= e^{-1/2} and by the expansion around x = 1,
//
//   Li_s(e^{-mu}) = Gamma(1-s) mu^{s-1} + sum_{k>=0} zeta(s-k) (-mu)^k / k!,
//
// otherwise. For integer s = m >= 1 the k = m-1 term of the expansion is
// replaced by (-mu)^{m-1}/(m-1)! (H_{m-1} - ln mu).

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace detail {

inline constexpr double kLn2 = 0.69314718055994530942;

// Dirichlet eta by the Borwein alternating-series acceleration. Accurate to
// ~1e-16 relative for real s >= 0.
inline double eta_borwein(double s) {
  constexpr int n = 40;
  std::array<double, n + 1> d{};
  double t = 1.0 / n;  // (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0
  double acc = t;
  d[0] = n * acc;
  for (int i = 1; i <= n; ++i) {
    t *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i) * (2.0 * i - 1.0));
    acc += t;
    d[i] = n * acc;
  }
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double term = (d[k] - d[n]) / std::pow(k + 1.0, s);
    sum += (k % 2 == 0) ? term : -term;
  }
  return -sum / d[n];
}

inline bool is_integer(double s) { return std::floor(s) == s; }

}  // namespace detail

/// Riemann zeta for real s != 1. Uses the accelerated alternating series for
/// s >= 0 and the reflection formula for s < 0.
inline double riemann_zeta(double s) {
  if (s == 1.0) throw DomainError("riemann_zeta: pole at s = 1");
  if (!std::isfinite(s)) throw DomainError("riemann_zeta: non-finite argument");
  if (s >= 0.0) {
    if (s > 60.0) return 1.0 + std::exp2(-s) + std::pow(3.0, -s);
    // 1 - 2^{1-s}, written to stay accurate next to the pole.
    const double denom = -std::expm1((1.0 - s) * detail::kLn2);
    return detail::eta_borwein(s) / denom;
  }
  if (detail::is_integer(s) && std::fmod(-s, 2.0) == 0.0) return 0.0;  // trivial zeros
  const double one_minus_s = 1.0 - s;
  return std::exp2(s) * std::pow(constants::pi, s - 1.0) *
         std::sin(constants::pi * s / 2.0) * std::tgamma(one_minus_s) *
         riemann_zeta(one_minus_s);
}

/// zeta(3), Apery's constant.
constexpr double zeta3() { return constants::zeta3; }

namespace detail {

inline constexpr double kPolylogMuCross = 0.5;  // x_cross = e^{-1/2}
inline constexpr int kExpansionTerms = 30;
inline constexpr int kPowTableSize = 512;

struct PolylogOrder {
  double s = 0.0;
  bool integer = false;
  double gamma_one_minus_s = 0.0;  // non-integer orders only
  double harmonic = 0.0;           // H_{s-1}, integer orders only
  std::array<double, kExpansionTerms> zeta_shift{};  // zeta(s - k)
  std::array<double, kPowTableSize> inv_pow{};       // n^{-s}
  bool has_table = false;
};

inline PolylogOrder make_polylog_order(double s, bool with_table) {
  PolylogOrder o;
  o.s = s;
  o.integer = is_integer(s);
  if (o.integer) {
    for (int j = 1; j < static_cast<int>(s); ++j) o.harmonic += 1.0 / j;
  } else {
    o.gamma_one_minus_s = std::tgamma(1.0 - s);
  }
  for (int k = 0; k < kExpansionTerms; ++k) {
    const double arg = s - k;
    o.zeta_shift[k] = (arg == 1.0) ? 0.0 : riemann_zeta(arg);
  }
  if (with_table) {
    o.inv_pow[0] = 0.0;
    for (int n = 1; n < kPowTableSize; ++n) {
      if (s == 0.5) {
        o.inv_pow[n] = 1.0 / std::sqrt(static_cast<double>(n));
      } else if (s == -0.5) {
        o.inv_pow[n] = std::sqrt(static_cast<double>(n));
      } else {
        o.inv_pow[n] = std::pow(static_cast<double>(n), -s);
      }
    }
    o.has_table = true;
  }
  return o;
}

// Orders used by the force kernels get their constants built once.
inline const PolylogOrder* cached_polylog_order(double s) {
  static const PolylogOrder half = make_polylog_order(0.5, true);
  static const PolylogOrder minus_half = make_polylog_order(-0.5, true);
  static const PolylogOrder three_half = make_polylog_order(1.5, true);
  static const PolylogOrder three = make_polylog_order(3.0, true);
  if (s == 0.5) return &half;
  if (s == -0.5) return &minus_half;
  if (s == 1.5) return &three_half;
  if (s == 3.0) return &three;
  return nullptr;
}

inline double polylog_series(const PolylogOrder& o, double x) {
  double sum = 0.0;
  double xn = 1.0;
  for (int n = 1;; ++n) {
    xn *= x;
    const double w = (o.has_table && n < kPowTableSize)
                         ? o.inv_pow[n]
                         : std::pow(static_cast<double>(n), -o.s);
    const double term = xn * w;
    sum += term;
    if (n >= 2 && term <= 1e-17 * sum) break;
    if (xn < std::numeric_limits<double>::min()) break;
  }
  return sum;
}

inline double polylog_expansion(const PolylogOrder& o, double mu) {
  double sum = 0.0;
  double c = 1.0;  // (-mu)^k / k!
  const int m = static_cast<int>(o.s);
  for (int k = 0; k < kExpansionTerms; ++k) {
    if (k > 0) c *= -mu / k;
    if (o.integer && k == m - 1) {
      sum += c * (o.harmonic - std::log(mu));
    } else {
      sum += o.zeta_shift[k] * c;
    }
  }
  if (!o.integer) sum += o.gamma_one_minus_s * std::pow(mu, o.s - 1.0);
  return sum;
}

inline double polylog_neg_exp_impl(const PolylogOrder& o, double mu) {
  if (mu > kPolylogMuCross) return polylog_series(o, std::exp(-mu));
  return polylog_expansion(o, mu);
}

}  // namespace detail

/// Li_s(e^{-mu}) for mu > 0 and s > -1. Taking mu instead of x keeps full
/// relative accuracy when x is within a few ulps of 1. mu = 0 is accepted
/// for s > 1 and returns zeta(s).
inline double polylog_neg_exp(double s, double mu) {
  if (!(s > -1.0)) throw DomainError("polylog: order must satisfy s > -1");
  if (!(mu >= 0.0)) throw DomainError("polylog: argument outside [0, 1)");
  if (std::isinf(mu)) return 0.0;
  if (mu == 0.0) {
    if (s > 1.0) return riemann_zeta(s);
    throw DomainError("polylog: Li_s(1) diverges for s <= 1");
  }
  if (s == 0.0) return 1.0 / std::expm1(mu);
  if (s == 1.0) return -std::log(-std::expm1(-mu));
  if (const auto* o = detail::cached_polylog_order(s)) return detail::polylog_neg_exp_impl(*o, mu);
  if (mu > detail::kPolylogMuCross) {
    detail::PolylogOrder plain;
    plain.s = s;
    return detail::polylog_series(plain, std::exp(-mu));
  }
  return detail::polylog_expansion(detail::make_polylog_order(s, false), mu);
}

/// Li_s(e^{-mu}) - Li_s(e^{-(mu + gap)}) for gap >= 0 without cancellation:
/// the series branch sums n^{-s} e^{-n mu} (1 - e^{-n gap}) with compensated
/// accumulation, the expansion branch differences each power of mu exactly.
inline double polylog_neg_exp_difference(double s, double mu, double gap) {
  if (!(gap >= 0.0)) throw DomainError("polylog difference: gap must be non-negative");
  if (gap == 0.0) return 0.0;
  const double hi = mu + gap;
  if (mu > detail::kPolylogMuCross) {
    const auto* o = detail::cached_polylog_order(s);
    const double x = std::exp(-mu);
    double sum = 0.0, comp = 0.0, xn = 1.0;
    for (int n = 1;; ++n) {
      xn *= x;
      const double w = (o && n < detail::kPowTableSize) ? o->inv_pow[n]
                                                        : std::pow(static_cast<double>(n), -s);
      const double bound = xn * w;
      const double y = bound * -std::expm1(-n * gap) - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
      if (n >= 2 && bound <= 1e-17 * sum) break;
      if (xn < std::numeric_limits<double>::min()) break;
    }
    return sum;
  }
  if (mu == 0.0 || hi > 2.5 || detail::is_integer(s)) {
    return polylog_neg_exp(s, mu) - polylog_neg_exp(s, hi);
  }
  const auto* cached = detail::cached_polylog_order(s);
  const detail::PolylogOrder local = cached ? detail::PolylogOrder{} : detail::make_polylog_order(s, false);
  const detail::PolylogOrder& o = cached ? *cached : local;
  double sum = o.gamma_one_minus_s * std::pow(mu, s - 1.0) * -std::expm1((s - 1.0) * std::log1p(gap / mu));
  double diff = gap;        // hi^k - mu^k
  double mu_pow = 1.0;      // mu^{k-1}
  double inv_fact = 1.0;    // 1/k!
  for (int k = 1; k < detail::kExpansionTerms; ++k) {
    if (k > 1) {
      mu_pow *= mu;
      diff = hi * diff + mu_pow * gap;
    }
    inv_fact /= k;
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
    sum += sign * o.zeta_shift[k] * diff * inv_fact;
  }
  return sum;
}

/// Li_s(x) for 0 <= x < 1, s > -1. x = 1 is accepted only for s = 3.
inline double polylog(double s, double x) {
  if (!(s > -1.0)) throw DomainError("polylog: order must satisfy s > -1");
  if (!(x >= 0.0) || x > 1.0) throw DomainError("polylog: argument outside [0, 1)");
  if (x == 1.0) {
    if (s == 3.0) return zeta3();
    throw DomainError("polylog: x = 1 is only defined here for s = 3");
  }
  if (x == 0.0) return 0.0;
  if (s == 0.0) return x / (1.0 - x);
  if (s == 1.0) return -std::log1p(-x);
  if (std::log(x) < -detail::kPolylogMuCross) {
    if (const auto* o = detail::cached_polylog_order(s)) return detail::polylog_series(*o, x);
    detail::PolylogOrder plain;
    plain.s = s;
    return detail::polylog_series(plain, x);
  }
  return polylog_neg_exp(s, -std::log(x));
}

}  // namespace casimir
