#pragma once

// Dielectric permittivity along the imaginary frequency axis. Frequencies
// and model parameters are photon energies in eV.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

struct IdealMetal {};

/// Drude metal, eps(w) = 1 - wp^2 / (w (w + i gamma)).
struct DrudeParams {
  double omega_p = 9.0;   // eV
  double gamma = 0.035;   // eV

  void validate() const {
    if (!(omega_p > 0.0)) throw DomainError("Drude: omega_p must be positive");
    if (!(gamma > 0.0)) throw DomainError("Drude: gamma must be positive");
  }
};

/// Gold values used throughout (plasma frequency and relaxation, eV).
inline constexpr DrudeParams kGoldDrude{9.0, 0.035};

struct Oscillator {
  double strength;  // g_j, eV^2
  double omega;     // omega_j, eV
  double gamma;     // gamma_j, eV
};

/// Dissipationless plasma term plus optional Lorentz oscillators for the
/// core-electron response. An empty list is the simple plasma model.
struct OscillatorSet {
  double omega_p = 9.0;
  std::vector<Oscillator> oscillators;

  void validate() const {
    if (!(omega_p > 0.0)) throw DomainError("plasma: omega_p must be positive");
    for (const auto& o : oscillators) {
      if (!(o.omega > 0.0)) throw DomainError("plasma: oscillator frequency must be positive");
      if (!(o.gamma >= 0.0)) throw DomainError("plasma: oscillator width must be non-negative");
      if (!std::isfinite(o.strength)) throw DomainError("plasma: oscillator strength must be finite");
    }
  }
};

/// Nondispersive dielectric with static permittivity eps0.
struct StaticDielectric {
  double eps0 = 3.0;

  void validate() const {
    if (!(eps0 > 1.0)) throw DomainError("dielectric: eps0 must exceed 1");
  }
  double r0() const { return (eps0 - 1.0) / (eps0 + 1.0); }
};

struct OpticalRow {
  double omega;   // eV
  double im_eps;  // Im eps(omega)
};

/// Tabulated Im eps(omega), strictly ascending in omega.
class OpticalTable {
 public:
  OpticalTable() = default;

  explicit OpticalTable(std::vector<OpticalRow> rows) : rows_(std::move(rows)) {
    if (rows_.size() < 2) throw MalformedTableError("optical table needs at least 2 rows");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& r = rows_[i];
      if (!(r.omega > 0.0) || !std::isfinite(r.omega)) {
        throw MalformedTableError("row " + std::to_string(i + 1) + ": omega must be positive");
      }
      if (!(r.im_eps > 0.0) || !std::isfinite(r.im_eps)) {
        throw MalformedTableError("row " + std::to_string(i + 1) + ": Im eps must be positive");
      }
      if (i > 0 && !(r.omega > rows_[i - 1].omega)) {
        throw MalformedTableError("row " + std::to_string(i + 1) + ": omega not strictly ascending");
      }
    }
  }

  const std::vector<OpticalRow>& rows() const { return rows_; }
  double omega_min() const { return rows_.front().omega; }
  double omega_max() const { return rows_.back().omega; }

  /// Log-log interpolation inside [omega_min, omega_max], zero outside.
  double im_eps(double omega) const {
    if (omega < omega_min() || omega > omega_max()) return 0.0;
    auto it = std::upper_bound(rows_.begin(), rows_.end(), omega,
                               [](double w, const OpticalRow& r) { return w < r.omega; });
    if (it == rows_.end()) return rows_.back().im_eps;
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double p = std::log(hi.im_eps / lo.im_eps) / std::log(hi.omega / lo.omega);
    return lo.im_eps * std::pow(omega / lo.omega, p);
  }

 private:
  std::vector<OpticalRow> rows_;
};

/// Parses the optical-data text format: `omega_eV im_eps` per line, or
/// `omega_eV n k` (Im eps = 2 n k). Blank lines and `#` comments are skipped.
inline OpticalTable read_optical_table(std::istream& in) {
  std::vector<OpticalRow> rows;
  std::string line;
  int lineno = 0;
  int columns = 0;
  double prev_omega = 0.0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    std::vector<double> vals;
    std::string tok;
    while (ss >> tok) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        throw MalformedTableError("not a number: '" + tok + "'", lineno);
      }
      if (used != tok.size()) throw MalformedTableError("not a number: '" + tok + "'", lineno);
      vals.push_back(v);
    }
    if (vals.size() != 2 && vals.size() != 3) {
      throw MalformedTableError("expected 2 or 3 columns, got " + std::to_string(vals.size()), lineno);
    }
    if (columns == 0) columns = static_cast<int>(vals.size());
    if (static_cast<int>(vals.size()) != columns) {
      throw MalformedTableError("column count changed from " + std::to_string(columns), lineno);
    }
    const double omega = vals[0];
    const double im = columns == 2 ? vals[1] : 2.0 * vals[1] * vals[2];
    if (!(omega > 0.0) || !std::isfinite(omega)) throw MalformedTableError("omega must be positive", lineno);
    if (!(im > 0.0) || !std::isfinite(im)) throw MalformedTableError("Im eps must be positive", lineno);
    if (!rows.empty() && !(omega > prev_omega)) {
      throw MalformedTableError("omega not strictly ascending", lineno);
    }
    prev_omega = omega;
    rows.push_back({omega, im});
  }
  if (rows.size() < 2) throw MalformedTableError("optical table needs at least 2 data rows");
  return OpticalTable(std::move(rows));
}

inline OpticalTable read_optical_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedTableError("cannot open optical data file '" + path + "'");
  return read_optical_table(in);
}

/// eps(i xi) from the dispersion relation
///   eps(i xi) = 1 + (2/pi) int_0^inf w Im eps(w) / (w^2 + xi^2) dw,
/// with Im eps given by the Drude form below the table, log-log interpolated
/// rows inside it and zero above it. The table part uses fixed composite
/// Gauss-Legendre panels in ln(omega), precomputed on construction.
class DispersionIntegral {
 public:
  static constexpr double kPanelWidth = 0.1;  // in ln(omega)

  DispersionIntegral(OpticalTable table, DrudeParams tail) : table_(std::move(table)), tail_(tail) {
    tail_.validate();
    using Rule = boost::math::quadrature::gauss<double, 8>;
    const auto& rows = table_.rows();
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      const double t0 = std::log(rows[i].omega);
      const double t1 = std::log(rows[i + 1].omega);
      const double p = std::log(rows[i + 1].im_eps / rows[i].im_eps) / (t1 - t0);
      const int panels = std::max(1, static_cast<int>(std::ceil((t1 - t0) / kPanelWidth)));
      const double h = (t1 - t0) / panels;
      for (int k = 0; k < panels; ++k) {
        const double mid = t0 + (k + 0.5) * h;
        auto add = [&](double x, double w) {
          const double t = mid + 0.5 * h * x;
          const double omega = std::exp(t);
          const double im = rows[i].im_eps * std::exp(p * (t - t0));
          omega2_.push_back(omega * omega);
          coef_.push_back(0.5 * h * w * omega * omega * im);
        };
        const auto& xs = Rule::abscissa();
        const auto& ws = Rule::weights();
        for (std::size_t j = 0; j < xs.size(); ++j) {
          if (xs[j] == 0.0) {
            add(0.0, ws[j]);
          } else {
            add(xs[j], ws[j]);
            add(-xs[j], ws[j]);
          }
        }
      }
    }
  }

  double operator()(double xi) const {
    if (!(xi > 0.0)) throw DomainError("kk_transform: xi must be positive");
    const double xi2 = xi * xi;
    double table_part = 0.0;
    for (std::size_t k = 0; k < coef_.size(); ++k) table_part += coef_[k] / (omega2_[k] + xi2);
    return 1.0 + (2.0 / constants::pi) * (table_part + drude_tail(xi));
  }

  const OpticalTable& table() const { return table_; }
  const DrudeParams& tail() const { return tail_; }
  std::size_t node_count() const { return coef_.size(); }

 private:
  // int_0^W w * wp^2 gamma / (w (w^2 + gamma^2)) / (w^2 + xi^2) dw
  double drude_tail(double xi) const {
    const double W = table_.omega_min();
    const double g = tail_.gamma;
    const double scale = tail_.omega_p * tail_.omega_p * g;
    const double d2 = xi * xi - g * g;
    if (std::abs(d2) > 0.1 * std::max(xi * xi, g * g)) {
      return scale * (std::atan(W / g) / g - std::atan(W / xi) / xi) / d2;
    }
    auto f = [&](double w) { return 1.0 / ((w * w + g * g) * (w * w + xi * xi)); };
    return scale * integrate(f, 0.0, W, 1e-13).value;
  }

  OpticalTable table_;
  DrudeParams tail_;
  std::vector<double> omega2_;
  std::vector<double> coef_;
};

/// Tabulated optical data with a Drude extrapolation below the table.
struct TabulatedModel {
  std::shared_ptr<const DispersionIntegral> dispersion;

  TabulatedModel(OpticalTable table, DrudeParams tail)
      : dispersion(std::make_shared<const DispersionIntegral>(std::move(table), tail)) {}
};

using PermittivityModel =
    std::variant<IdealMetal, DrudeParams, OscillatorSet, StaticDielectric, TabulatedModel>;

inline std::string model_name(const PermittivityModel& m) {
  static constexpr const char* names[] = {"ideal", "drude", "plasma", "dielectric", "tabulated"};
  return names[m.index()];
}

inline void validate_model(const PermittivityModel& m) {
  std::visit(
      [](const auto& x) {
        if constexpr (requires { x.validate(); }) x.validate();
      },
      m);
}

/// One-shot dispersion relation; builds the quadrature nodes on every call.
inline double kk_transform(const OpticalTable& table, const DrudeParams& tail, double xi) {
  if (!(xi > 0.0)) throw DomainError("kk_transform: xi must be positive");
  return DispersionIntegral(table, tail)(xi);
}

/// eps(i xi) for the dispersive models. xi in eV.
inline double eps_imag_axis(const PermittivityModel& model, double xi) {
  if (!(xi > 0.0)) throw DomainError("eps_imag_axis: xi must be positive");
  struct Visitor {
    double xi;
    double operator()(const IdealMetal&) const {
      throw UnsupportedModelError("eps_imag_axis: ideal metal has no finite permittivity");
    }
    double operator()(const StaticDielectric&) const {
      throw UnsupportedModelError("eps_imag_axis: static dielectric has no frequency response");
    }
    double operator()(const DrudeParams& d) const {
      return 1.0 + d.omega_p * d.omega_p / (xi * (xi + d.gamma));
    }
    double operator()(const OscillatorSet& p) const {
      double eps = 1.0 + p.omega_p * p.omega_p / (xi * xi);
      for (const auto& o : p.oscillators) eps += o.strength / (o.omega * o.omega + xi * xi + o.gamma * xi);
      return eps;
    }
    double operator()(const TabulatedModel& t) const { return (*t.dispersion)(xi); }
  };
  return std::visit(Visitor{xi}, model);
}

namespace zero_freq {
/// r_TM^2 = r_TE^2 = 1.
struct IdealMetal {};
/// r_TM = 1, r_TE = 0.
struct DrudeLike {};
/// r_TM = 1, r_TE = -(alpha v - sqrt(alpha^2 v^2 + 1))^2, alpha = delta0 / (2a).
struct PlasmaLike {
  double alpha;
  double skin_depth;  // delta0 = c / omega_p, m
};
/// r_TM = r0 = (eps0 - 1) / (eps0 + 1), r_TE = 0.
struct Dielectric {
  double r0;
};
}  // namespace zero_freq

using ZeroFreqBehavior =
    std::variant<zero_freq::IdealMetal, zero_freq::DrudeLike, zero_freq::PlasmaLike, zero_freq::Dielectric>;

/// Skin depth c / omega_p in metres for omega_p given in eV.
inline double skin_depth(double omega_p_eV) { return constants::hbar_c_eV_nm / omega_p_eV * 1e-9; }

/// Zero-frequency reflection behaviour of a model at separation a (m).
inline ZeroFreqBehavior zero_frequency_character(const PermittivityModel& model, double a) {
  if (!(a > 0.0)) throw DomainError("zero_frequency_character: separation must be positive");
  struct Visitor {
    double a;
    ZeroFreqBehavior operator()(const IdealMetal&) const { return zero_freq::IdealMetal{}; }
    ZeroFreqBehavior operator()(const DrudeParams&) const { return zero_freq::DrudeLike{}; }
    ZeroFreqBehavior operator()(const TabulatedModel&) const { return zero_freq::DrudeLike{}; }
    ZeroFreqBehavior operator()(const OscillatorSet& p) const {
      const double d0 = skin_depth(p.omega_p);
      return zero_freq::PlasmaLike{d0 / (2.0 * a), d0};
    }
    ZeroFreqBehavior operator()(const StaticDielectric& d) const { return zero_freq::Dielectric{d.r0()}; }
  };
  return std::visit(Visitor{a}, model);
}

}  // namespace casimir
