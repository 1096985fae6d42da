#pragma once

// Run configuration shared by every subcommand. CLI units (nm, um, K, eV)
// are converted to SI here and nowhere else.

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "casimir/casimir.hpp"

namespace casimir::cli {

struct RunConfig {
  std::optional<double> a_nm;
  std::string a_sweep;  // MIN:MAX:N[:log], nm
  double R_um = 100.0;
  double L_um = 100.0;
  double T = constants::default_temperature;
  std::string model = "drude";
  double omega_p = kGoldDrude.omega_p;
  double gamma = kGoldDrude.gamma;
  double eps0 = 3.0;
  std::string optical_data;
  std::string oscillators;  // g:omega:gamma[,g:omega:gamma...], eV
  std::optional<double> theta;
  std::optional<double> a_theta;
  double rel_tol = 1e-9;
  int max_matsubara = 100000;
  bool parallel = false;
  unsigned threads = 0;
  std::string format = "csv";
  std::string plot;
  std::string out;

  // thermal-correction / asymptote
  std::string quantity = "force";
  // experiment mapping (all three or none)
  std::optional<double> omega0;
  std::optional<double> lever_arm;
  std::optional<double> inertia;
  std::optional<double> df_res;
  // edge-error
  std::vector<double> L1_um;
  // table1
  bool with_zero = false;
  // kk-ingest
  std::string ingest_path;
};

struct Sweep {
  double lo;
  double hi;
  int n;
  bool log;
};

inline Sweep parse_sweep(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() < 3 || parts.size() > 4) throw DomainError("--a-sweep: expected MIN:MAX:N or MIN:MAX:N:log");
  Sweep s{};
  try {
    std::size_t used = 0;
    s.lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    s.hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    s.n = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
  } catch (const std::logic_error&) {
    throw DomainError("--a-sweep: cannot parse '" + spec + "'");
  }
  s.log = parts.size() == 4;
  if (s.log && parts[3] != "log") throw DomainError("--a-sweep: fourth field must be 'log'");
  if (!(s.lo > 0.0)) throw DomainError("--a-sweep: MIN must be positive");
  // a single-point sweep is written MIN:MIN:1
  if (s.n == 1) {
    if (s.lo != s.hi) throw DomainError("--a-sweep: a 1-point sweep needs MIN == MAX");
    return s;
  }
  if (!(s.lo < s.hi)) throw DomainError("--a-sweep: MIN must be below MAX");
  if (s.n < 2) throw DomainError("--a-sweep: need at least 2 points");
  return s;
}

/// Sweep points in nm, ascending.
inline std::vector<double> sweep_points(const Sweep& s) {
  std::vector<double> pts(s.n);
  if (s.n == 1) {
    pts[0] = s.lo;
    return pts;
  }
  for (int i = 0; i < s.n; ++i) {
    const double t = static_cast<double>(i) / (s.n - 1);
    pts[i] = s.log ? s.lo * std::pow(s.hi / s.lo, t) : s.lo + (s.hi - s.lo) * t;
  }
  pts.back() = s.hi;
  return pts;
}

/// Separations in nm from --a or --a-sweep; `fallback` when neither is set.
inline std::vector<double> separations_nm(const RunConfig& c, const std::vector<double>& fallback = {}) {
  if (c.a_nm && !c.a_sweep.empty()) throw DomainError("give either --a or --a-sweep, not both");
  if (c.a_nm) {
    if (!(*c.a_nm > 0.0)) throw DomainError("--a must be positive");
    return {*c.a_nm};
  }
  if (!c.a_sweep.empty()) return sweep_points(parse_sweep(c.a_sweep));
  if (fallback.empty()) throw DomainError("a separation is required: --a or --a-sweep");
  return fallback;
}

inline Geometry geometry(const RunConfig& c, double a_nm) {
  Geometry g{a_nm * 1e-9, c.R_um * 1e-6, c.L_um * 1e-6};
  g.validate();
  return g;
}

inline std::vector<Oscillator> parse_oscillators(const std::string& spec) {
  std::vector<Oscillator> out;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) {
    std::stringstream is(item);
    std::vector<double> v;
    for (std::string f; std::getline(is, f, ':');) {
      try {
        v.push_back(std::stod(f));
      } catch (const std::logic_error&) {
        throw DomainError("--oscillators: cannot parse '" + item + "'");
      }
    }
    if (v.size() != 3) throw DomainError("--oscillators: each entry is strength:omega:gamma");
    out.push_back({v[0], v[1], v[2]});
  }
  return out;
}

inline PermittivityModel build_model(const RunConfig& c) {
  PermittivityModel m;
  if (c.model == "ideal") {
    m = IdealMetal{};
  } else if (c.model == "drude") {
    m = DrudeParams{c.omega_p, c.gamma};
  } else if (c.model == "plasma") {
    m = OscillatorSet{c.omega_p, parse_oscillators(c.oscillators)};
  } else if (c.model == "dielectric") {
    m = StaticDielectric{c.eps0};
  } else if (c.model == "tabulated") {
    if (c.optical_data.empty()) throw DomainError("--model tabulated needs --optical-data");
    m = TabulatedModel(read_optical_table(c.optical_data), DrudeParams{c.omega_p, c.gamma});
  } else {
    throw DomainError("unknown model '" + c.model + "'");
  }
  validate_model(m);
  return m;
}

inline QuadratureSpec quadrature(const RunConfig& c) {
  QuadratureSpec q;
  q.rel_tol = c.rel_tol;
  q.max_matsubara = c.max_matsubara;
  q.parallel = c.parallel;
  q.threads = c.threads;
  q.validate();
  return q;
}

inline Quantity quantity(const RunConfig& c) {
  if (c.quantity == "force") return Quantity::force;
  if (c.quantity == "gradient") return Quantity::gradient;
  throw DomainError("--quantity must be force or gradient");
}

inline std::optional<TiltParams> tilt(const RunConfig& c, const Geometry& g) {
  if (c.theta && c.a_theta) throw DomainError("give either --theta or --a-theta, not both");
  if (c.theta) return TiltParams::from_angle(*c.theta, g);
  if (c.a_theta) return TiltParams::from_a_theta(*c.a_theta, g);
  return std::nullopt;
}

inline std::optional<OscillatorParams> oscillator(const RunConfig& c) {
  const int given = (c.omega0 ? 1 : 0) + (c.lever_arm ? 1 : 0) + (c.inertia ? 1 : 0);
  if (given == 0) return std::nullopt;
  if (given != 3) throw DomainError("oscillator mapping needs --omega0, --lever-arm and --inertia together");
  OscillatorParams o{*c.omega0, *c.lever_arm, *c.inertia};
  o.validate();
  return o;
}

}  // namespace casimir::cli
