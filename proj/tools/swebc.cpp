// Command-line front end: regime classification, identity verification,
// stability-region sampling, analysis comparison, and the simulation driver.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "swe/bc_analysis.hpp"
#include "swe/io.hpp"
#include "swe/run_config.hpp"
#include "swe/simulation.hpp"
#include "swe/verification.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 1 verification failure, 2 invalid input or
// configuration, 3 ambiguous flow regime, 4 dry state, 5 divergence,
// 6 strict-mode regime mismatch.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitAmbiguous = 3;
constexpr int kExitDryState = 4;
constexpr int kExitDiverged = 5;
constexpr int kExitRegimeMismatch = 6;

struct PointArgs {
  double phi = 1.0, u = 0.0, v = 0.0;
  double nx = 1.0, ny = 0.0;
  double gravity = 9.81, coriolis = 0.0;
  double wall_tol = -1.0, fr_tol = 1e-9;
};

void add_point_options(CLI::App* cmd, PointArgs& a) {
  cmd->add_option("--phi", a.phi, "geopotential (must be positive)")->required();
  cmd->add_option("--u", a.u, "x velocity")->required();
  cmd->add_option("--v", a.v, "y velocity")->required();
  cmd->add_option("--nx", a.nx, "outward normal x component")->required();
  cmd->add_option("--ny", a.ny, "outward normal y component")->required();
  cmd->add_option("--gravity", a.gravity, "gravitational constant")->capture_default_str();
  cmd->add_option("--coriolis", a.coriolis, "Coriolis parameter")->capture_default_str();
  cmd->add_option("--wall-tol", a.wall_tol,
                  "wall tolerance on |u_n| (negative selects 1e-12 * celerity)");
  cmd->add_option("--fr-tol", a.fr_tol, "relative crossover tolerance on the Froude number")
      ->capture_default_str();
}

json point_report(const PointArgs& a) {
  const swe::State s = swe::make_state(a.phi, a.u, a.v);
  const swe::UnitNormal n = swe::make_unit_normal(a.nx, a.ny);
  const swe::PhysParams p{a.gravity, a.coriolis};
  swe::validate_params(p);
  const swe::ClassifyTolerances tol{a.wall_tol, a.fr_tol};

  const swe::AnalysisComparison cmp = swe::compare_analyses(s, n, tol);
  const swe::Vec3 lam = swe::augmented_eigenvalues(s, n);
  const double c = swe::celerity(s);
  const double un = swe::normal_velocity(s, n);

  json out;
  out["state"] = {{"phi", s.phi}, {"u", s.u}, {"v", s.v}};
  out["normal"] = {{"nx", n.nx}, {"ny", n.ny}};
  out["gravity"] = p.gravity;
  out["coriolis"] = p.coriolis;
  out["celerity"] = c;
  out["normal_velocity"] = un;
  out["froude"] = swe::froude(s, n);
  out["regime"] = swe::to_string(cmp.regime);
  out["required_bc_count"] = swe::required_bc_count(cmp.regime);
  out["augmented_eigenvalues"] = {lam(0), lam(1), lam(2)};
  out["classical_eigenvalues"] = {un + c, un, un - c};
  out["comparison"] = {
      {"nonlinear", cmp.nonlinear}, {"linear", cmp.linear}, {"entropy", cmp.entropy}};
  return out;
}

int write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return kExitBadInput;
  }
  out << text;
  return kExitOk;
}

int run_verify(int trials, std::uint64_t seed) {
  constexpr double kTolerance = 1e-12;
  const swe::IdentityResiduals res = swe::run_identity_suite(trials, seed);

  json out;
  out["trials"] = trials;
  out["seed"] = seed;
  out["tolerance"] = kTolerance;
  json residuals;
  for (const auto& [name, value] : res.items()) residuals[name] = value;
  out["residuals"] = residuals;
  const bool pass = res.max() <= kTolerance;
  out["pass"] = pass;
  std::cout << out.dump(2) << "\n";

  if (!pass) {
    for (const auto& [name, value] : res.items()) {
      if (value > kTolerance)
        std::cerr << "identity family failed: " << name << " residual " << value << " > "
                  << kTolerance << "\n";
    }
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_ellipse(double fr, const std::string& kind_name, int samples,
                const std::string& format, const std::string& output) {
  const swe::EllipseKind kind =
      kind_name == "inflow" ? swe::EllipseKind::Inflow : swe::EllipseKind::Outflow;
  if (format == "svg") return write_text(output, swe::ellipse_region_svg(fr, kind, samples));
  const auto pts = swe::ellipse_boundary(fr, kind, samples);
  std::ostringstream os;
  swe::write_ellipse_csv(os, pts);
  return write_text(output, os.str());
}

int run_simulate(const std::string& config_path) {
  const swe::RunConfig cfg = swe::load_run_config(config_path);
  const swe::PreparedRun run = swe::prepare_run(cfg);
  const swe::SimResult result = swe::integrate(run.initial, run.bcs, run.dt, run.steps, run.options);

  {
    std::ofstream out(cfg.energy_csv);
    if (!out) {
      std::cerr << "error: cannot open " << cfg.energy_csv << "\n";
      return kExitBadInput;
    }
    swe::write_energy_csv(out, result.report);
  }
  {
    std::ofstream out(cfg.field_csv);
    if (!out) {
      std::cerr << "error: cannot open " << cfg.field_csv << "\n";
      return kExitBadInput;
    }
    swe::write_field_csv(out, result.final_field);
  }

  double max_energy = 0.0, max_flux = 0.0;
  for (double e : result.report.energy) max_energy = std::max(max_energy, e);
  for (double bf : result.report.boundary_flux) max_flux = std::max(max_flux, std::abs(bf));
  long mismatched = 0, ambiguous = 0;
  for (const auto& log : result.report.edge_log) {
    for (const auto& entry : log) {
      mismatched += entry.mismatched;
      ambiguous += entry.ambiguous;
    }
  }

  json out;
  out["status"] = swe::to_string(result.status);
  if (!result.message.empty()) out["message"] = result.message;
  out["dt"] = run.dt;
  out["steps_recorded"] = result.report.times.empty() ? 0 : result.report.times.size() - 1;
  out["initial_energy"] = result.report.energy.empty() ? 0.0 : result.report.energy.front();
  out["final_energy"] = result.report.energy.empty() ? 0.0 : result.report.energy.back();
  out["max_energy"] = max_energy;
  out["max_abs_boundary_flux"] = max_flux;
  out["cfl_exceeded"] = result.report.cfl_exceeded;
  out["regime_mismatched_nodes"] = mismatched;
  out["regime_ambiguous_nodes"] = ambiguous;
  out["energy_csv"] = cfg.energy_csv;
  out["field_csv"] = cfg.field_csv;
  std::cout << out.dump(2) << "\n";

  switch (result.status) {
    case swe::SimStatus::Completed: return kExitOk;
    case swe::SimStatus::DryState: return kExitDryState;
    case swe::SimStatus::Diverged: return kExitDiverged;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-stability analysis and desk-scale simulation of the 2D nonlinear "
               "shallow water equations"};
  app.require_subcommand(1);

  PointArgs classify_args;
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Classify a boundary state and report the required boundary conditions");
  add_point_options(classify_cmd, classify_args);

  PointArgs compare_args;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Report the nonlinear/linear/entropy boundary-condition counts");
  add_point_options(compare_cmd, compare_args);

  int verify_trials = 1000;
  std::uint64_t verify_seed = 42;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the randomized identity suites and report residuals");
  verify_cmd->add_option("--trials", verify_trials, "number of random trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "random seed")->capture_default_str();

  double ellipse_fr = 0.25;
  std::string ellipse_kind = "inflow", ellipse_format = "csv", ellipse_output;
  int ellipse_samples = 256;
  CLI::App* ellipse_cmd = app.add_subcommand(
      "ellipse", "Sample the boundary of the energy-stable coefficient region");
  ellipse_cmd->add_option("--fr", ellipse_fr, "Froude number in (0, 1/2)")->required();
  ellipse_cmd->add_option("--kind", ellipse_kind, "inflow or outflow")
      ->check(CLI::IsMember({"inflow", "outflow"}))
      ->required();
  ellipse_cmd->add_option("--samples", ellipse_samples, "number of boundary samples")
      ->check(CLI::Range(3, 1 << 20))
      ->capture_default_str();
  ellipse_cmd->add_option("--format", ellipse_format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();
  ellipse_cmd->add_option("--output,-o", ellipse_output, "output path (stdout when omitted)");

  std::string sim_config;
  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "Run a simulation described by a JSON configuration file");
  simulate_cmd->add_option("config", sim_config, "path to the configuration file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (app.got_subcommand(classify_cmd)) {
      std::cout << point_report(classify_args).dump(2) << "\n";
      return kExitOk;
    }
    if (app.got_subcommand(compare_cmd)) {
      const json full = point_report(compare_args);
      json out = full["comparison"];
      out["regime"] = full["regime"];
      out["froude"] = full["froude"];
      std::cout << out.dump(2) << "\n";
      return kExitOk;
    }
    if (app.got_subcommand(verify_cmd)) return run_verify(verify_trials, verify_seed);
    if (app.got_subcommand(ellipse_cmd))
      return run_ellipse(ellipse_fr, ellipse_kind, ellipse_samples, ellipse_format,
                         ellipse_output);
    if (app.got_subcommand(simulate_cmd)) return run_simulate(sim_config);
  } catch (const swe::AmbiguousRegime& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "hint: the required number of boundary conditions changes here; nudge the "
                 "state or adjust --fr-tol to pick a side deliberately\n";
    return kExitAmbiguous;
  } catch (const swe::RegimeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRegimeMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
