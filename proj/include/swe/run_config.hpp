#pragma once

#include <array>
#include <optional>
#include <string>

#include "swe/simulation.hpp"

namespace swe {

struct BadRunConfig : std::runtime_error {
  explicit BadRunConfig(const std::string& what) : std::runtime_error(what) {}
};

/// Per-edge boundary configuration. External data may be given directly in
/// characteristic variables or as a primitive external state that is
/// converted with the edge normal when the run is prepared.
struct EdgeConfig {
  Regime regime = Regime::Wall;
  std::vector<double> coefficients;
  std::vector<double> external_data;
  std::optional<State> external_state;
};

/// Parsed form of a simulation configuration file.
struct RunConfig {
  double a = 1.0, b = 1.0;
  int nx = 32, ny = 32;
  PhysParams params{};
  InitialConditions initial{};
  std::array<EdgeConfig, 4> edges{};  // indexed by Edge
  double dt = 0.0;                    // 0 selects the advisory CFL step
  double cfl = 0.4;
  int steps = 0;
  double dissipation = 0.0;
  double penalty = 1.0;
  WallClosure wall_closure = WallClosure::Reflect;
  bool strict_regimes = false;
  bool validate_stability = false;  // reject coefficients outside the stability region
  std::string energy_csv = "energy.csv";
  std::string field_csv = "field.csv";
};

/// Parses a JSON configuration document; throws BadRunConfig on any schema
/// or value problem.
RunConfig parse_run_config(const std::string& json_text);

/// Reads and parses a configuration file.
RunConfig load_run_config(const std::string& path);

/// Everything integrate() needs, built and validated from a RunConfig:
/// grid, initial field, per-edge boundary specifications (with external
/// data resolved to characteristic variables) and the resolved time step.
struct PreparedRun {
  Grid grid;
  Field initial;
  EdgeConditions bcs;
  SimOptions options;
  double dt;
  int steps;
};

PreparedRun prepare_run(const RunConfig& cfg);

}  // namespace swe
