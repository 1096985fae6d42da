#pragma once

#include <algorithm>
#include <cstdio>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "casimir/casimir.hpp"
#include "cli/config.hpp"
#include "cli/table.hpp"

namespace casimir::cli {

namespace detail {

inline std::string num(double x) { return fmt_number(x); }

/// Evaluate f at each point; rows come back in input order whatever the
/// completion order.
template <class F>
std::vector<std::vector<Cell>> map_points(const std::vector<double>& pts, const RunConfig& c, F f) {
  std::vector<std::vector<Cell>> rows(pts.size());
  if (!c.parallel || pts.size() < 2) {
    for (std::size_t i = 0; i < pts.size(); ++i) rows[i] = f(pts[i]);
    return rows;
  }
  const std::size_t workers =
      c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < std::min(workers, pts.size()); ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < pts.size(); i += workers) rows[i] = f(pts[i]);
    }));
  }
  for (auto& j : jobs) j.get();
  return rows;
}

inline void common_meta(Table& t, const RunConfig& c, const std::string& command, const PermittivityModel* m) {
  t.meta.push_back({"command", command});
  if (m) {
    t.meta.push_back({"model", model_name(*m)});
    if (c.model == "drude" || c.model == "tabulated") {
      t.meta.push_back({"omega_p_eV", num(c.omega_p)});
      t.meta.push_back({"gamma_eV", num(c.gamma)});
    } else if (c.model == "plasma") {
      t.meta.push_back({"omega_p_eV", num(c.omega_p)});
      if (!c.oscillators.empty()) t.meta.push_back({"oscillators", c.oscillators});
    } else if (c.model == "dielectric") {
      t.meta.push_back({"eps0", num(c.eps0)});
    }
    if (c.model == "tabulated") t.meta.push_back({"optical_data", c.optical_data});
  }
  t.meta.push_back({"R_um", num(c.R_um)});
  t.meta.push_back({"L_um", num(c.L_um)});
  t.meta.push_back({"T_K", num(c.T)});
  t.meta.push_back({"rel_tol", num(c.rel_tol)});
  if (c.a_nm) t.meta.push_back({"a_nm", num(*c.a_nm)});
  if (!c.a_sweep.empty()) t.meta.push_back({"a_sweep_nm", c.a_sweep});
}

inline void pfa_note(Table& t, const std::vector<double>& a_nm, const RunConfig& c) {
  for (double a : a_nm) {
    if (geometry(c, a).pfa_warning()) {
      t.notes.push_back("a/R > 0.05 at a = " + num(a) + " nm; the PFA error estimate 0.3 a/R no longer applies");
      return;
    }
  }
}

}  // namespace detail

/// Force or gradient at each separation; tilted when --theta/--a-theta is set.
inline Table cmd_force(const RunConfig& c, Quantity which) {
  const auto model = build_model(c);
  const auto q = quadrature(c);
  const auto pts = separations_nm(c);
  const auto osc = oscillator(c);
  const bool force = which == Quantity::force;
  const bool tilted = c.theta || c.a_theta;
  if (c.df_res && !osc) throw DomainError("--df-res needs the oscillator parameters");
  if (osc && force) throw DomainError("the oscillator mapping takes a gradient; use the gradient command");

  Table t;
  detail::common_meta(t, c, force ? "force" : "gradient", &model);
  if (c.theta) t.meta.push_back({"theta_rad", detail::num(*c.theta)});
  if (c.a_theta) t.meta.push_back({"a_theta", detail::num(*c.a_theta)});
  if (osc) {
    t.meta.push_back({"omega0_rad_per_s", detail::num(osc->omega_0)});
    t.meta.push_back({"lever_arm_m", detail::num(osc->b)});
    t.meta.push_back({"inertia_kg_m2", detail::num(osc->moment_I)});
    if (c.df_res) {
      const auto floor = sensitivity_floor(*osc, *c.df_res);
      t.meta.push_back({"df_res_Hz", detail::num(*c.df_res)});
      t.meta.push_back({"min_gradient_N_per_m", detail::num(floor.gradient)});
      t.meta.push_back({"static_force_floor_N", detail::num(floor.force)});
    }
  }
  t.columns = {"a_nm", force ? "force_N" : "gradient_N_per_m", force ? "per_length_N_per_m" : "per_length_N_per_m2",
               "l_used", "truncation_estimate", "pfa_warning"};
  if (tilted) {
    t.columns.push_back("a_theta");
    t.columns.push_back("kappa");
  }
  if (osc) t.columns.push_back("omega_res_rad_per_s");

  const ThermalState thermal{c.T};
  t.rows = detail::map_points(pts, c, [&](double a_nm) {
    const auto g = geometry(c, a_nm);
    const auto tp = tilt(c, g);
    ForceResult r;
    if (tp) {
      r = force ? tilted_force(g, thermal, model, *tp, q) : tilted_gradient(g, thermal, model, *tp, q);
    } else {
      r = cylinder_quantity(which, g, thermal, model, q);
    }
    std::vector<Cell> row{a_nm, r.value, r.per_length, static_cast<double>(r.l_used), r.truncation_estimate,
                          r.pfa_warning ? 1.0 : 0.0};
    if (tp) {
      row.push_back(tp->a_theta);
      row.push_back(kappa(tp->a_theta));
    }
    if (osc) row.push_back(resonant_frequency(*osc, r.value));
    return row;
  });
  detail::pfa_note(t, pts, c);
  t.plot_y = {1};
  t.plot_title = force ? "Casimir force" : "Casimir force gradient";
  return t;
}

/// Relative thermal correction [X(T) - X(0)] / X(T).
inline Table cmd_thermal_correction(const RunConfig& c) {
  const auto model = build_model(c);
  const auto q = quadrature(c);
  const auto which = quantity(c);
  const auto pts = separations_nm(c);
  const bool force = which == Quantity::force;

  Table t;
  detail::common_meta(t, c, "thermal-correction", &model);
  t.meta.push_back({"quantity", c.quantity});
  const std::string unit = force ? "_N" : "_N_per_m";
  t.columns = {"a_nm", "delta_T", "delta_T_percent", "value_T" + unit, "value_0" + unit};
  t.rows = detail::map_points(pts, c, [&](double a_nm) {
    const auto g = geometry(c, a_nm);
    const double hot = c.T > 0.0 ? cylinder_quantity(which, g, ThermalState{c.T}, model, q).value : 0.0;
    const double cold = cylinder_quantity(which, g, ThermalState{0.0}, model, q).value;
    const double delta = c.T > 0.0 ? (hot - cold) / hot : 0.0;
    return std::vector<Cell>{a_nm, delta, 100.0 * delta, c.T > 0.0 ? hot : cold, cold};
  });
  detail::pfa_note(t, pts, c);
  t.plot_y = {2};
  t.plot_title = force ? "thermal correction to the force (%)" : "thermal correction to the gradient (%)";
  return t;
}

/// kappa_nm grid over a in {100..500} nm and A in {0.01, 0.05, 0.1, 0.5}, plus kappa(A).
inline Table cmd_table1(const RunConfig& c) {
  const auto model = build_model(c);
  const auto q = quadrature(c);
  const std::vector<double> a_grid{100, 150, 200, 300, 400, 500};
  std::vector<double> A_grid{0.01, 0.05, 0.1, 0.5};
  if (c.with_zero) A_grid.insert(A_grid.begin(), 0.0);

  Table t;
  detail::common_meta(t, c, "table1", &model);
  t.columns = {"row"};
  for (double A : A_grid) t.columns.push_back("A_theta=" + detail::num(A));
  const ThermalState thermal{c.T};
  t.rows = detail::map_points(a_grid, c, [&](double a_nm) {
    const auto g = geometry(c, a_nm);
    std::vector<Cell> row{"kappa_nm(" + detail::num(a_nm) + " nm)"};
    const double parallel = cylinder_force(g, thermal, model, q).value;
    for (double A : A_grid) {
      if (A == 0.0) {
        row.push_back(1.0);
        continue;
      }
      row.push_back(tilted_force(g, thermal, model, TiltParams::from_a_theta(A, g), q).value / parallel);
    }
    return row;
  });
  std::vector<Cell> last{std::string("kappa")};
  for (double A : A_grid) last.push_back(kappa(A));
  t.rows.push_back(last);
  t.plot_x = -1;
  return t;
}

/// Total PFA error budget, edge terms and, with --L1, the overhang terms.
inline Table cmd_edge_error(const RunConfig& c) {
  const auto pts = separations_nm(c, {100.0, 500.0});
  Table t;
  detail::common_meta(t, c, "edge-error", nullptr);
  t.meta.push_back({"gamma_a", detail::num(edge::gamma_a)});
  t.meta.push_back({"C_ed", detail::num(edge::C_ed)});
  t.meta.push_back({"C_ed_gradient", detail::num(edge::C_ed_gradient)});
  t.meta.push_back({"C_ex", detail::num(edge::C_ex)});
  t.meta.push_back({"C_ex_gradient", detail::num(edge::C_ex_gradient)});
  t.columns = {"a_nm", "force_error_percent", "gradient_error_percent", "edge_force_percent",
               "edge_gradient_percent"};
  for (double L1 : c.L1_um) t.columns.push_back("overhang_extra_percent_L1=" + detail::num(L1) + "um");

  for (double a_nm : pts) {
    const auto g = geometry(c, a_nm);
    std::vector<Cell> row{a_nm, 100.0 * total_pfa_error(g, Quantity::force),
                          100.0 * total_pfa_error(g, Quantity::gradient), 100.0 * edge::C_ed * g.a / g.L,
                          100.0 * edge::C_ed_gradient * g.a / g.L};
    for (double L1 : c.L1_um) {
      const auto o = overhang_force(g, EdgeParams{L1 * 1e-6});
      if (o.warning) {
        t.notes.push_back("L1 = " + detail::num(L1) + " um, a = " + detail::num(a_nm) +
                          " nm: L1 or H below 20 a, the overhang expansion is unreliable");
      }
      row.push_back(100.0 * o.extra_terms);
    }
    t.rows.push_back(row);
  }
  detail::pfa_note(t, pts, c);
  t.plot_y = {1, 2};
  t.plot_title = "total PFA error (%)";
  return t;
}

/// Read an optical table and report eps(i xi) from the dispersion relation.
inline Table cmd_kk_ingest(const RunConfig& c) {
  const std::string path = !c.ingest_path.empty() ? c.ingest_path : c.optical_data;
  if (path.empty()) throw DomainError("kk-ingest needs a table path");
  const auto table = read_optical_table(path);
  const DrudeParams tail{c.omega_p, c.gamma};
  tail.validate();
  const DispersionIntegral eps(table, tail);

  Table t;
  t.meta.push_back({"command", "kk-ingest"});
  t.meta.push_back({"path", path});
  t.meta.push_back({"rows", std::to_string(table.rows().size())});
  t.meta.push_back({"omega_min_eV", detail::num(table.rows().front().omega)});
  t.meta.push_back({"omega_max_eV", detail::num(table.rows().back().omega)});
  t.meta.push_back({"tail_omega_p_eV", detail::num(c.omega_p)});
  t.meta.push_back({"tail_gamma_eV", detail::num(c.gamma)});
  t.columns = {"xi_eV", "eps_imag_axis", "eps_drude_reference"};
  constexpr int n = 21;
  for (int i = 0; i < n; ++i) {
    const double xi = 1e-3 * std::pow(1e5, static_cast<double>(i) / (n - 1));
    t.rows.push_back({xi, eps(xi), eps_imag_axis(tail, xi)});
  }
  t.plot_y = {1, 2};
  t.plot_title = "eps(i xi)";
  return t;
}

/// Numeric force/gradient next to the high-temperature closed forms.
inline Table cmd_asymptote(const RunConfig& c) {
  const auto model = build_model(c);
  const auto q = quadrature(c);
  const auto pts = separations_nm(c);
  if (!(c.T > 0.0)) throw DomainError("asymptote needs T > 0");
  Table t;
  detail::common_meta(t, c, "asymptote", &model);
  t.columns = {"a_nm", "tau", "force_N", "force_asymptote_N", "force_ratio", "gradient_N_per_m",
               "gradient_asymptote_N_per_m", "gradient_ratio"};
  const ThermalState thermal{c.T};
  t.rows = detail::map_points(pts, c, [&](double a_nm) {
    const auto g = geometry(c, a_nm);
    const auto behavior = zero_frequency_character(model, g.a);
    const double f = cylinder_force(g, thermal, model, q).value;
    const double d = cylinder_force_gradient(g, thermal, model, q).value;
    double fa = std::nan(""), da = std::nan("");
    try {
      fa = high_temperature_force(g, c.T, behavior);
      da = high_temperature_gradient(g, c.T, behavior);
    } catch (const DomainError&) {
      // plasma expansion outside delta0/a < 0.5
    }
    return std::vector<Cell>{a_nm, thermal.tau(g.a), f, fa, f / fa, d, da, d / da};
  });
  detail::pfa_note(t, pts, c);
  t.plot_y = {4, 7};
  t.plot_title = "numeric / high-temperature asymptote";
  return t;
}

}  // namespace casimir::cli
