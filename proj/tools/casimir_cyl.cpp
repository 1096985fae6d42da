// casimir-cyl: command-line front end for the cylinder-plate Casimir library.
//
// Exit codes: 0 success, 2 configuration or input error, 3 convergence failure.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "casimir/casimir.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/table.hpp"

namespace {

using casimir::cli::RunConfig;
using casimir::cli::Table;

constexpr int kExitConfig = 2;
constexpr int kExitConvergence = 3;

void add_shared_options(CLI::App& app, RunConfig& c) {
  app.add_option("--a", c.a_nm, "separation (nm)");
  app.add_option("--a-sweep", c.a_sweep, "separation sweep MIN:MAX:N[:log] (nm)");
  app.add_option("--R", c.R_um, "cylinder radius (um)")->capture_default_str();
  app.add_option("--L", c.L_um, "cylinder length (um)")->capture_default_str();
  app.add_option("--T", c.T, "temperature (K)")->capture_default_str();
  app.add_option("--model", c.model, "permittivity model")
      ->check(CLI::IsMember({"ideal", "drude", "plasma", "dielectric", "tabulated"}))
      ->capture_default_str();
  app.add_option("--omega-p", c.omega_p, "plasma frequency (eV)")->capture_default_str();
  app.add_option("--gamma", c.gamma, "Drude relaxation (eV)")->capture_default_str();
  app.add_option("--eps0", c.eps0, "static permittivity of the dielectric model")->capture_default_str();
  app.add_option("--optical-data", c.optical_data, "optical table: omega_eV im_eps per line");
  app.add_option("--oscillators", c.oscillators, "plasma-model oscillators g:omega:gamma[,...] (eV)");
  auto* theta = app.add_option("--theta", c.theta, "tilt angle (rad)");
  auto* a_theta = app.add_option("--a-theta", c.a_theta, "tilt parameter theta L / (2a)");
  theta->excludes(a_theta);
  app.add_option("--rel-tol", c.rel_tol, "relative tolerance")->capture_default_str();
  app.add_option("--max-matsubara", c.max_matsubara, "cap on Matsubara terms")->capture_default_str();
  app.add_flag("--parallel", c.parallel, "evaluate on worker threads");
  app.add_option("--threads", c.threads, "worker threads (0 = all cores)");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--plot", c.plot, "write an SVG line chart");
  app.add_option("--out", c.out, "output file (default stdout)");
}

int emit(const Table& t, const RunConfig& c) {
  for (const auto& n : t.notes) std::cerr << "warning: " << n << '\n';
  std::ostringstream body;
  if (c.format == "json") {
    casimir::cli::write_json(body, t);
  } else {
    casimir::cli::write_csv(body, t);
  }
  if (c.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw casimir::DomainError("cannot open output file " + c.out);
    f << body.str();
  }
  if (!c.plot.empty()) {
    if (t.plot_x < 0) throw casimir::DomainError("this command has no plot");
    std::ofstream f(c.plot, std::ios::binary);
    if (!f) throw casimir::DomainError("cannot open plot file " + c.plot);
    casimir::cli::write_svg(f, t);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Thermal Casimir force between a cylinder and a plate (PFA)", "casimir-cyl"};
  app.set_config("--config", "", "read options from a key = value file; flags override it");
  app.require_subcommand(1);
  app.fallthrough();
  add_shared_options(app, c);

  std::function<Table()> run;
  auto* force = app.add_subcommand("force", "Casimir force (N)");
  force->callback([&] { run = [&] { return casimir::cli::cmd_force(c, casimir::Quantity::force); }; });
  auto* gradient = app.add_subcommand("gradient", "force gradient dF/da (N/m)");
  for (auto* sub : {force, gradient}) {
    sub->add_option("--omega0", c.omega0, "oscillator natural frequency (rad/s)");
    sub->add_option("--lever-arm", c.lever_arm, "oscillator lever arm (m)");
    sub->add_option("--inertia", c.inertia, "oscillator moment of inertia (kg m^2)");
    sub->add_option("--df-res", c.df_res, "frequency resolution (Hz)");
  }
  gradient->callback([&] { run = [&] { return casimir::cli::cmd_force(c, casimir::Quantity::gradient); }; });

  auto* thermal = app.add_subcommand("thermal-correction", "relative thermal correction");
  thermal->add_option("--quantity", c.quantity, "force or gradient")
      ->check(CLI::IsMember({"force", "gradient"}))
      ->capture_default_str();
  thermal->callback([&] { run = [&] { return casimir::cli::cmd_thermal_correction(c); }; });

  auto* table1 = app.add_subcommand("table1", "tilt correction factors on the standard grid");
  table1->add_flag("--with-zero", c.with_zero, "add an A_theta = 0 column");
  table1->callback([&] { run = [&] { return casimir::cli::cmd_table1(c); }; });

  auto* edge = app.add_subcommand("edge-error", "PFA and edge error budget");
  edge->add_option("--L1", c.L1_um, "overhang distance(s) of the axis from the plate edge (um)")->delimiter(',');
  edge->callback([&] { run = [&] { return casimir::cli::cmd_edge_error(c); }; });

  auto* kk = app.add_subcommand("kk-ingest", "validate an optical table and tabulate eps(i xi)");
  kk->add_option("path", c.ingest_path, "optical data file");
  kk->callback([&] { run = [&] { return casimir::cli::cmd_kk_ingest(c); }; });

  auto* asym = app.add_subcommand("asymptote", "numeric values against the high-temperature limits");
  asym->callback([&] { run = [&] { return casimir::cli::cmd_asymptote(c); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    return emit(run(), c);
  } catch (const casimir::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const casimir::MalformedTableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::logic_error& e) {  // DomainError, UnsupportedModelError
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
