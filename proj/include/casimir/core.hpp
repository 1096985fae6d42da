#pragma once

// Casimir force and force gradient between a cylinder and a plate in the
// proximity-force approximation, with the Lifshitz pressure as the local
// kernel. Everything below `detail` works in the dimensionless variables
//
//   v = 2 q a,   zeta_l = xi_l / omega_c = tau l,   tau = 4 pi k_B T a / (hbar c),
//
// and SI units appear only when a ForceResult is assembled.

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/dielectric.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/reflection.hpp"
#include "casimir/specfun.hpp"

namespace casimir {

/// Cylinder of radius R and length L at minimum separation a above a plate (SI).
struct Geometry {
  double a;
  double R;
  double L;

  void validate() const {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("geometry: separation a must be positive");
    if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("geometry: radius R must be positive");
    if (!(L > 0.0)) throw DomainError("geometry: length L must be positive");
  }
  /// The PFA error model (about 0.3 a/R) assumes a << R.
  bool pfa_warning() const { return a / R > 0.05; }
};

struct ThermalState {
  double T = constants::default_temperature;  // K

  void validate() const {
    if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("temperature must be finite and >= 0");
  }
  /// Dimensionless Matsubara step 4 pi k_B T a / (hbar c).
  double tau(double a) const { return 4.0 * constants::pi * constants::k_B * T * a / constants::hbar_c; }
};

enum class Quantity { force, gradient };

inline const char* to_string(Quantity q) { return q == Quantity::force ? "force" : "gradient"; }

struct ForceResult {
  double value = 0.0;       // N (force) or N/m (gradient)
  double per_length = 0.0;  // value / L
  int l_used = 0;           // Matsubara terms summed; 0 for the T = 0 integral
  double truncation_estimate = 0.0;
  bool pfa_warning = false;
};

namespace detail {

/// hbar omega_c = hbar c / (2a) in eV.
inline double hbar_omega_c_eV(double a) { return constants::hbar_c_eV_nm / (2.0 * a * 1e9); }

/// -ln r^2 per polarization, +inf where r = 0. Computed from the Fresnel
/// parts directly so r^2 close to 1 keeps its digits in e^{-v} r^2.
struct Attenuations {
  double tm;
  double te;
};

inline constexpr double kNoReflection = std::numeric_limits<double>::infinity();

inline double log_attenuation(double r) {
  if (r == 0.0) return kNoReflection;
  return -2.0 * std::log(std::abs(r));
}

/// Fresnel attenuations at v >= zeta, same rationalised parts as fresnel().
inline Attenuations fresnel_attenuation(double v, double zeta, double eps) {
  const double chi = eps - 1.0;
  const double v2 = v * v;
  const double z2 = zeta * zeta;
  const double s = std::sqrt(v2 + chi * z2);
  const double tm_minus = chi * ((eps + 1.0) * v2 - z2) / (eps * v + s);  // eps v - s
  const double te_minus = chi * z2 / (v + s);                            // s - v
  const double tm = tm_minus > 0.0 ? 2.0 * std::log1p(2.0 * s / tm_minus) : kNoReflection;
  const double te = te_minus > 0.0 ? 2.0 * std::log1p(2.0 * v / te_minus) : kNoReflection;
  return {tm, te};
}

/// Reflection attenuations at one imaginary frequency, as functions of v.
class FrequencyResponse {
 public:
  static FrequencyResponse at(const PermittivityModel& model, double zeta, double a) {
    FrequencyResponse r;
    r.zeta_ = zeta;
    if (std::holds_alternative<IdealMetal>(model)) {
      r.kind_ = Kind::ideal;
    } else if (zeta == 0.0) {
      r.kind_ = Kind::zero;
      r.zero_ = zero_frequency_character(model, a);
    } else if (const auto* d = std::get_if<StaticDielectric>(&model)) {
      r.kind_ = Kind::finite;
      r.eps_ = d->eps0;
    } else {
      r.kind_ = Kind::finite;
      r.eps_ = eps_imag_axis(model, zeta * hbar_omega_c_eV(a));
    }
    return r;
  }

  Attenuations operator()(double v) const {
    switch (kind_) {
      case Kind::ideal:
        return {0.0, 0.0};
      case Kind::zero: {
        if (const auto* p = std::get_if<zero_freq::PlasmaLike>(&zero_)) {
          // r_TE = -1 / (x + sqrt(x^2+1))^2
          return {0.0, 4.0 * std::asinh(p->alpha * v)};
        }
        const auto p = zero_frequency_pair(zero_, v);
        return {log_attenuation(p.r_tm), log_attenuation(p.r_te)};
      }
      case Kind::finite:
        break;
    }
    return fresnel_attenuation(std::max(v, zeta_), zeta_, eps_);
  }

  double eps() const { return eps_; }

 private:
  enum class Kind { ideal, zero, finite };
  Kind kind_ = Kind::ideal;
  double eps_ = 1.0;
  double zeta_ = 0.0;
  ZeroFreqBehavior zero_{zero_freq::IdealMetal{}};
};

/// v^{3/2} [Li_{1/2}(r_TM^2 e^{-v}) + Li_{1/2}(r_TE^2 e^{-v})] for the force,
/// v^{5/2} [Li_{-1/2}(...) + Li_{-1/2}(...)] for the gradient. A nonzero tilt
/// A multiplies each n-term by sinh(A n v)/(A n v); summed over n this is
///   [Li_{s+1}(r^2 e^{-(1-A)v}) - Li_{s+1}(r^2 e^{-(1+A)v})] / (2 A v).
struct LifshitzKernel {
  Quantity quantity = Quantity::force;
  double tilt = 0.0;

  double power() const { return quantity == Quantity::force ? 1.5 : 2.5; }
  double rate() const { return 1.0 - tilt; }

  double operator()(double v, Attenuations r) const {
    if (!(v > 0.0)) return 0.0;
    const bool force = quantity == Quantity::force;
    const double order = force ? 0.5 : -0.5;
    const double weight = force ? v * std::sqrt(v) : v * v * std::sqrt(v);
    return weight * (polarization(order, v, r.tm) + polarization(order, v, r.te));
  }

 private:
  double polarization(double order, double v, double att) const {
    if (att == kNoReflection) return 0.0;
    const double mu = v + att;
    if (tilt == 0.0) return polylog_neg_exp(order, mu);
    const double gap = 2.0 * tilt * v;
    return polylog_neg_exp_difference(order + 1.0, mu - tilt * v, gap) / gap;
  }
};

/// v^2 sum_alpha r^2 e^{-v} / (1 - r^2 e^{-v}), the plate-plate pressure kernel.
struct PressureKernel {
  double power() const { return 2.0; }
  double rate() const { return 1.0; }
  double operator()(double v, Attenuations r) const {
    if (!(v > 0.0)) return 0.0;
    auto one = [v](double att) { return att == kNoReflection ? 0.0 : 1.0 / std::expm1(v + att); };
    return v * v * (one(r.tm) + one(r.te));
  }
};

template <class Kernel>
double frequency_integral(const Kernel& kernel, const PermittivityModel& model, double a, double zeta,
                          double rel_tol, unsigned depth) {
  const auto response = FrequencyResponse::at(model, zeta, a);
  auto f = [&](double v) { return kernel(v, response(v)); };
  return integrate_decaying(f, zeta, kernel.power(), kernel.rate(), rel_tol, depth).value;
}

struct DimensionlessSum {
  double value = 0.0;
  int terms = 0;
  double truncation = 0.0;
};

/// sum'_l int_{tau l}^inf K dv, the l = 0 term halved. Terms are reduced in
/// ascending l so serial and parallel evaluation give identical bits. The
/// sum stops once both the latest term and the geometric tail estimate
/// behind it stay below rel_tol times the partial sum for 3 consecutive l.
template <class Kernel>
DimensionlessSum matsubara_sum(const Kernel& kernel, const PermittivityModel& model, double a, double tau,
                               const QuadratureSpec& quad) {
  const double term_tol = 0.1 * quad.rel_tol;
  auto term = [&](int l) {
    const double t = frequency_integral(kernel, model, a, tau * l, term_tol, quad.max_depth);
    return l == 0 ? 0.5 * t : t;
  };

  unsigned workers = 1;
  if (quad.parallel) {
    workers = quad.threads ? quad.threads : std::max(1u, std::thread::hardware_concurrency());
  }
  const int block = quad.parallel ? static_cast<int>(4 * workers) : 1;

  DimensionlessSum out;
  double prev = 0.0;
  int quiet = 0;
  std::vector<double> buffer;
  for (int l0 = 0; l0 < quad.max_matsubara; l0 += block) {
    const int n = std::min(block, quad.max_matsubara - l0);
    buffer.assign(n, 0.0);
    if (quad.parallel && n > 1) {
      std::vector<std::future<void>> jobs;
      const int stride = static_cast<int>(workers);
      for (int w = 0; w < stride; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
          for (int i = w; i < n; i += stride) buffer[i] = term(l0 + i);
        }));
      }
      for (auto& j : jobs) j.get();
    } else {
      for (int i = 0; i < n; ++i) buffer[i] = term(l0 + i);
    }
    for (int i = 0; i < n; ++i) {
      const int l = l0 + i;
      const double t = buffer[i];
      out.value += t;
      out.terms = l + 1;
      if (l == 0) {
        prev = t;
        continue;
      }
      const double mag = std::abs(t);
      const double ratio = prev != 0.0 ? std::abs(t / prev) : 0.0;
      const double tail = (ratio > 0.0 && ratio < 1.0) ? mag * ratio / (1.0 - ratio) : mag;
      const double scale = quad.rel_tol * std::abs(out.value);
      quiet = (mag <= scale && tail <= scale) ? quiet + 1 : 0;
      prev = t;
      if (quiet >= 3) {
        out.truncation = out.value != 0.0 ? tail / std::abs(out.value) : 0.0;
        return out;
      }
    }
  }
  throw ConvergenceError("Matsubara sum did not converge within " + std::to_string(quad.max_matsubara) +
                         " terms");
}

/// int_0^inf dzeta int_zeta^inf K dv, the T -> 0 limit of tau * sum'_l.
template <class Kernel>
double zero_temperature_integral(const Kernel& kernel, const PermittivityModel& model, double a,
                                 const QuadratureSpec& quad) {
  const double inner_tol = 0.01 * quad.rel_tol;
  auto inner = [&](double zeta) { return frequency_integral(kernel, model, a, zeta, inner_tol, quad.max_depth); };
  return integrate_decaying(inner, 0.0, kernel.power() + 1.0, kernel.rate(), 0.1 * quad.rel_tol, quad.max_depth)
      .value;
}

/// k_B T at T > 0; hbar c / (4 pi a) replaces k_B T / tau at T = 0.
inline double thermal_weight(double T, double a) {
  return T > 0.0 ? constants::k_B * T : constants::hbar_c / (4.0 * constants::pi * a);
}

/// Prefactor per unit length multiplying the dimensionless sum.
inline double cylinder_prefactor(Quantity q, double a, double R, double weight) {
  const double geom = std::sqrt(R / (2.0 * a));
  if (q == Quantity::force) return -weight / (4.0 * constants::sqrt_pi * a * a) * geom;
  return weight / (4.0 * constants::sqrt_pi * a * a * a) * geom;
}

inline void validate_inputs(const Geometry& g, const ThermalState& t, const PermittivityModel& m,
                            const QuadratureSpec& q) {
  g.validate();
  t.validate();
  validate_model(m);
  q.validate();
}

/// Shared driver for the parallel and tilted cylinder formulas.
inline ForceResult evaluate_cylinder(const Geometry& g, const ThermalState& t, const PermittivityModel& m,
                                     const LifshitzKernel& kernel, const QuadratureSpec& q) {
  validate_inputs(g, t, m, q);
  ForceResult r;
  double sum = 0.0;
  if (t.T == 0.0) {
    sum = zero_temperature_integral(kernel, m, g.a, q);
  } else {
    const auto s = matsubara_sum(kernel, m, g.a, t.tau(g.a), q);
    sum = s.value;
    r.l_used = s.terms;
    r.truncation_estimate = s.truncation;
  }
  r.per_length = cylinder_prefactor(kernel.quantity, g.a, g.R, thermal_weight(t.T, g.a)) * sum;
  r.value = r.per_length * g.L;
  r.pfa_warning = g.pfa_warning();
  return r;
}

}  // namespace detail

/// Casimir force on the cylinder (N, negative = attraction).
inline ForceResult cylinder_force(const Geometry& g, const ThermalState& t, const PermittivityModel& m,
                                  const QuadratureSpec& q = {}) {
  return detail::evaluate_cylinder(g, t, m, {Quantity::force, 0.0}, q);
}

/// dF/da (N/m, positive for an attractive force that weakens with a).
inline ForceResult cylinder_force_gradient(const Geometry& g, const ThermalState& t, const PermittivityModel& m,
                                           const QuadratureSpec& q = {}) {
  return detail::evaluate_cylinder(g, t, m, {Quantity::gradient, 0.0}, q);
}

inline ForceResult cylinder_quantity(Quantity which, const Geometry& g, const ThermalState& t,
                                     const PermittivityModel& m, const QuadratureSpec& q = {}) {
  return which == Quantity::force ? cylinder_force(g, t, m, q) : cylinder_force_gradient(g, t, m, q);
}

/// T = 0 force from the continuous-frequency double integral.
inline ForceResult zero_temperature_force(const Geometry& g, const PermittivityModel& m,
                                          const QuadratureSpec& q = {}) {
  return cylinder_force(g, ThermalState{0.0}, m, q);
}

inline ForceResult zero_temperature_gradient(const Geometry& g, const PermittivityModel& m,
                                             const QuadratureSpec& q = {}) {
  return cylinder_force_gradient(g, ThermalState{0.0}, m, q);
}

/// Plate-plate Lifshitz pressure (Pa, negative = attraction).
inline double plate_pressure(double a, double T, const PermittivityModel& m, const QuadratureSpec& q = {}) {
  detail::validate_inputs({a, 1.0, 1.0}, ThermalState{T}, m, q);
  const detail::PressureKernel kernel;
  double sum = 0.0;
  if (T == 0.0) {
    sum = detail::zero_temperature_integral(kernel, m, a, q);
  } else {
    sum = detail::matsubara_sum(kernel, m, a, ThermalState{T}.tau(a), q).value;
  }
  return -detail::thermal_weight(T, a) / (8.0 * constants::pi * a * a * a) * sum;
}

/// Only the l = 0 Matsubara term (weight 1/2), evaluated numerically. This
/// is the whole force in the high-temperature limit.
inline ForceResult zero_frequency_term(Quantity which, const Geometry& g, const ThermalState& t,
                                       const PermittivityModel& m, const QuadratureSpec& q = {}) {
  detail::validate_inputs(g, t, m, q);
  if (!(t.T > 0.0)) throw DomainError("zero_frequency_term: temperature must be positive");
  const detail::LifshitzKernel kernel{which, 0.0};
  const double sum = 0.5 * detail::frequency_integral(kernel, m, g.a, 0.0, 0.1 * q.rel_tol, q.max_depth);
  ForceResult r;
  r.per_length = detail::cylinder_prefactor(which, g.a, g.R, constants::k_B * t.T) * sum;
  r.value = r.per_length * g.L;
  r.l_used = 1;
  r.pfa_warning = g.pfa_warning();
  return r;
}

// Closed forms ---------------------------------------------------------------

/// Ideal metal, T = 0: -pi^3 hbar c L / (384 a^3) sqrt(R/2a).
inline double ideal_force_zero_temperature(const Geometry& g) {
  const double pi3 = constants::pi * constants::pi * constants::pi;
  return -pi3 * constants::hbar_c * g.L / (384.0 * g.a * g.a * g.a) * std::sqrt(g.R / (2.0 * g.a));
}

/// Ideal metal, T = 0: 7 pi^3 hbar c L / (768 a^4) sqrt(R/2a).
inline double ideal_gradient_zero_temperature(const Geometry& g) {
  const double pi3 = constants::pi * constants::pi * constants::pi;
  return 7.0 * pi3 * constants::hbar_c * g.L / (768.0 * g.a * g.a * g.a * g.a) * std::sqrt(g.R / (2.0 * g.a));
}

/// Ideal-metal plate pressure at T = 0: -pi^2 hbar c / (240 a^4).
inline double ideal_pressure_zero_temperature(double a) {
  return -constants::pi * constants::pi * constants::hbar_c / (240.0 * a * a * a * a);
}

namespace detail {

// 3 zeta(3) k_B T L / (16 a^2) sqrt(R/2a) times the zero-frequency weight
// (1 for ideal metal, 1/2 TM-only, Li_3(r0^2)/zeta(3) for a dielectric).
inline double high_t_scale(Quantity which, const Geometry& g, double T) {
  const double geom = std::sqrt(g.R / (2.0 * g.a));
  const double kT = constants::k_B * T;
  if (which == Quantity::force) return -3.0 * constants::zeta3 * kT * g.L / (16.0 * g.a * g.a) * geom;
  return 15.0 * constants::zeta3 * kT * g.L / (32.0 * g.a * g.a * g.a) * geom;
}

}  // namespace detail

/// High-temperature (large-separation) asymptote for a given zero-frequency
/// behaviour. The plasma case carries the skin-depth expansion to second
/// order and requires delta0/a < 0.5.
inline double high_temperature_limit(Quantity which, const Geometry& g, double T, const ZeroFreqBehavior& b) {
  g.validate();
  if (!(T > 0.0)) throw DomainError("high_temperature_limit: temperature must be positive");
  const double scale = detail::high_t_scale(which, g, T);
  struct Visitor {
    Quantity which;
    double a;
    double operator()(const zero_freq::IdealMetal&) const { return 1.0; }
    double operator()(const zero_freq::DrudeLike&) const { return 0.5; }
    double operator()(const zero_freq::Dielectric& d) const { return 0.5 * polylog(3.0, d.r0 * d.r0) / constants::zeta3; }
    double operator()(const zero_freq::PlasmaLike& p) const {
      const double x = p.skin_depth / a;
      if (!(x < 0.5)) throw DomainError("high_temperature_limit: skin-depth expansion needs delta0/a < 0.5");
      if (which == Quantity::force) return 1.0 - 2.5 * x + 8.75 * x * x;
      return 1.0 - 3.5 * x + 15.75 * x * x;
    }
  };
  return scale * std::visit(Visitor{which, g.a}, b);
}

inline double high_temperature_force(const Geometry& g, double T, const ZeroFreqBehavior& b) {
  return high_temperature_limit(Quantity::force, g, T, b);
}

inline double high_temperature_gradient(const Geometry& g, double T, const ZeroFreqBehavior& b) {
  return high_temperature_limit(Quantity::gradient, g, T, b);
}

/// Metal body facing a dielectric body: the dielectric high-T form with
/// Li_3(r0^2) replaced by Li_3(r0), independent of the metal model.
inline double high_temperature_limit_metal_dielectric(Quantity which, const Geometry& g, double T, double r0) {
  g.validate();
  if (!(T > 0.0)) throw DomainError("high_temperature_limit: temperature must be positive");
  if (!(r0 > 0.0 && r0 < 1.0)) throw DomainError("high_temperature_limit: r0 must lie in (0, 1)");
  return detail::high_t_scale(which, g, T) * 0.5 * polylog(3.0, r0) / constants::zeta3;
}

/// Relative thermal correction [X(a, T) - X(a, 0)] / X(a, T), X = F or F'.
inline double thermal_correction(const Geometry& g, const PermittivityModel& m, const QuadratureSpec& q,
                                 Quantity which, double T = constants::default_temperature) {
  if (T == 0.0) return 0.0;
  const double hot = cylinder_quantity(which, g, ThermalState{T}, m, q).value;
  const double cold = cylinder_quantity(which, g, ThermalState{0.0}, m, q).value;
  return (hot - cold) / hot;
}

}  // namespace casimir
