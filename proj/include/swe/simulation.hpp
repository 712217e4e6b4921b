#pragma once

#include <array>
#include <string>

#include "swe/bc_analysis.hpp"
#include "swe/grid.hpp"

namespace swe {

struct RegimeMismatch : std::runtime_error {
  explicit RegimeMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Boundary-condition specification for each edge of the rectangle.
struct EdgeConditions {
  BCSpec left, right, bottom, top;

  const BCSpec& operator[](Edge e) const {
    switch (e) {
      case Edge::Left: return left;
      case Edge::Right: return right;
      case Edge::Bottom: return bottom;
      case Edge::Top: return top;
    }
    return left;
  }
};

/// Derivative closure used on edges configured as walls. Reflect mirrors the
/// normal velocity through the boundary, which keeps u_n = 0 to machine
/// precision without Coriolis forcing; one-sided keeps the plain difference
/// closure and leaves wall enforcement entirely to the penalty terms.
enum class WallClosure { Reflect, OneSided };

struct SimOptions {
  double penalty = 1.0;           // multiplier on the |lambda| penalty strengths
  double dissipation = 0.0;       // fourth-difference coefficient (0 disables)
  WallClosure wall_closure = WallClosure::Reflect;
  bool periodic = false;          // wrap in both directions; boundary terms off
  bool strict_regimes = false;    // abort when a boundary node leaves its regime
  double advisory_cfl = 0.4;
  ClassifyTolerances classify_tol{};
};

struct EdgeRegimeLogEntry {
  Regime midpoint;       // classification of the edge midpoint node
  int mismatched = 0;    // nodes whose regime differs from the configured one
  int ambiguous = 0;     // nodes whose classification was ambiguous
};

struct EnergyReport {
  std::vector<double> times;
  std::vector<double> energy;            // ||q||_P^2 via trapezoidal quadrature
  std::vector<double> boundary_flux;     // closed line integral of the energy flux
  std::array<std::vector<EdgeRegimeLogEntry>, 4> edge_log;  // indexed by Edge
  bool cfl_exceeded = false;
};

enum class SimStatus { Completed, DryState, Diverged };

const char* to_string(SimStatus s);

struct SimResult {
  EnergyReport report;
  Field final_field;
  SimStatus status = SimStatus::Completed;
  std::string message;
};

/// Trapezoidal quadrature of the energy density q^T P q over the domain.
double energy_norm(const Field& f);

/// Closed boundary line integral of the energy flux, evaluated two ways.
struct BoundaryAudit {
  double flux_form = 0.0;       // trapezoidal integral of fx*nx + fy*ny
  double quadratic_form = 0.0;  // same integral via the characteristic quadratic
  double max_node_mismatch = 0.0;  // worst pointwise disagreement, relative with floor 1
};

BoundaryAudit boundary_flux_audit(const Field& f);

/// Advisory time step: cfl * min(dx, dy) / max(|velocity| + c).
double cfl_timestep(const Field& f, double cfl = 0.4);

/// Semi-discrete tendency: central differences of the non-conservative form
/// in the interior plus penalty terms on the incoming characteristic
/// residuals w^- - R w^+ - g_ext at boundary nodes. Edges whose
/// specification requires zero conditions receive no penalty.
Field rhs(const Field& f, const EdgeConditions& bcs, const SimOptions& opt = {});

/// Classical four-stage Runge-Kutta loop recording energy, boundary flux and
/// per-edge regimes once per step. Stops early with DryState when the
/// geopotential loses positivity and with Diverged when the energy exceeds
/// 1e6 times its initial value (or turns non-finite).
SimResult integrate(const Field& initial, const EdgeConditions& bcs, double dt, int nsteps,
                    const SimOptions& opt = {});

enum class InitialPreset { RestBump, UniformStream, StreamBump };

/// Built-in initial states: a Gaussian geopotential bump at rest, a uniform
/// stream, or the stream with the bump superimposed.
struct InitialConditions {
  InitialPreset preset = InitialPreset::RestBump;
  double phi0 = 1.0;
  double amplitude = 0.0;
  double width = 0.1;
  double cx = 0.5;
  double cy = 0.5;
  double u0 = 0.0;
  double v0 = 0.0;
};

Field build_initial_field(const Grid& g, const PhysParams& p, const InitialConditions& ic);

}  // namespace swe
