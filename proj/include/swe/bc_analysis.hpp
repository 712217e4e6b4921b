#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "swe/types.hpp"

namespace swe {

/// Flow regime at a boundary point. The split of the subcritical regimes at
/// Froude number 1/2 follows the sign pattern of the augmented eigenvalues
/// (u_n + c/2, u_n, u_n - c/2), not the classical ones.
enum class Regime {
  SupercriticalInflow,
  SupercriticalOutflow,
  SubcriticalInflowLowFr,
  SubcriticalInflowHighFr,
  SubcriticalOutflowLowFr,
  SubcriticalOutflowHighFr,
  Wall,
};

const char* to_string(Regime r);
Regime regime_from_string(std::string_view name);

struct AmbiguousRegime : std::runtime_error {
  double froude;
  explicit AmbiguousRegime(double fr)
      : std::runtime_error("flow regime is ambiguous: Froude number " + std::to_string(fr) +
                           " is within tolerance of a crossover (1/2 or 1); an augmented "
                           "eigenvalue is within tolerance of zero"),
        froude(fr) {}
};

struct OutOfRegime : std::domain_error {
  explicit OutOfRegime(double fr)
      : std::domain_error("Froude number " + std::to_string(fr) +
                          " is outside the open subcritical band (0, 1/2)") {}
};

struct PartitionMismatch : std::logic_error {
  explicit PartitionMismatch(const std::string& what) : std::logic_error(what) {}
};

struct WrongCoefficientCount : std::invalid_argument {
  explicit WrongCoefficientCount(const std::string& what) : std::invalid_argument(what) {}
};

struct UnstableCoefficients : std::domain_error {
  explicit UnstableCoefficients(const std::string& what) : std::domain_error(what) {}
};

/// Tolerances used when classifying a boundary state.
/// wall_tol < 0 selects the default |u_n| <= 1e-12 * c.
/// fr_tol is relative to each crossover value (1/2 and 1).
struct ClassifyTolerances {
  double wall_tol = -1.0;
  double fr_tol = 1e-9;
};

/// Froude number of the normal flow component, |u_n| / c.
double froude(const State& s, const UnitNormal& n);

/// Propagation speeds of the boundary energy quadratic:
///   (u_n + c/2, u_n, u_n - c/2).
Vec3 augmented_eigenvalues(const State& s, const UnitNormal& n);

/// Classifies the boundary state. Throws AmbiguousRegime when the Froude
/// number sits within fr_tol of a crossover, where an augmented eigenvalue
/// changes sign and the caller must decide how to proceed.
Regime classify(const State& s, const UnitNormal& n, ClassifyTolerances tol = {});

/// Minimal number of boundary conditions for energy stability; equals the
/// number of negative augmented eigenvalues (a wall counts one, u_n = 0).
int required_bc_count(Regime r);

/// Boundary-condition specification in characteristic variables:
///   w^- = reflection * w^+ + external_data,
/// where w^- collects the incoming amplitudes (negative augmented eigenvalue)
/// and w^+ the outgoing ones. `incoming`/`outgoing` hold the indices into
/// (w1, w2, w3) for each block.
struct BCSpec {
  Regime regime;
  Eigen::MatrixXd reflection;     // rows = incoming count, cols = outgoing count
  Eigen::VectorXd external_data;  // size = incoming count
  std::vector<int> incoming;
  std::vector<int> outgoing;
};

/// Builds the BCSpec for a regime. Low-Froude inflow and outflow take two
/// coefficients (gamma, theta); every other regime takes none. When
/// validate_froude is given, low-Froude coefficients outside the stability
/// region for that Froude number are rejected with UnstableCoefficients.
BCSpec build_bc(Regime r, std::span<const double> coefficients,
                std::optional<double> validate_froude = std::nullopt);

struct StabilityResult {
  bool stable;
  double margin;  // minimum eigenvalue of the outgoing-block condition matrix
};

/// Energy-stability test for a reflection boundary condition: forms
/// Lambda^+ + R^T Lambda^- R on the outgoing subspace and checks positive
/// semi-definiteness. An empty outgoing block is stable with margin zero; an
/// empty incoming block is stable with margin min(Lambda^+). Homogeneous
/// form: external_data plays no role here.
StabilityResult stability_check(const BCSpec& bc, const Vec3& lambda);

enum class EllipseKind { Inflow, Outflow };

/// True iff (gamma, theta) satisfies the energy-stability inequality for
/// subcritical inflow with the given Froude number in (0, 1/2):
///   gamma^2 Fr + theta^2 (1/2 + Fr) <= 1/2 - Fr.
/// Boundary membership (equality) counts as stable.
bool inflow_ellipse_contains(double froude, double gamma, double theta);

/// Outflow counterpart on (0, 1/2):
///   gamma^2 Fr (1/2 - Fr) + theta^2 (1/2 + Fr)(1/2 - Fr) <= Fr (1/2 + Fr).
bool outflow_ellipse_contains(double froude, double gamma, double theta);

struct EllipseAxes {
  double gamma;  // semi-axis along the gamma coordinate
  double theta;  // semi-axis along the theta coordinate
};

EllipseAxes ellipse_semi_axes(double froude, EllipseKind kind);

/// Samples the boundary of the stability region; every returned point
/// satisfies the containment inequality with equality to within 1e-12.
std::vector<std::array<double, 2>> ellipse_boundary(double froude, EllipseKind kind,
                                                    int nsamples);

/// Number of boundary conditions demanded by the three analyses:
/// nonlinear (augmented eigenvalues), linear (classical eigenvalues
/// u_n + c, u_n, u_n - c), and the entropy-flux sign rule (3 for inflow,
/// 0 otherwise). The analyses disagree in parts of the subcritical band.
struct AnalysisComparison {
  int nonlinear;
  int linear;
  int entropy;
  Regime regime;
};

AnalysisComparison compare_analyses(const State& s, const UnitNormal& n,
                                    ClassifyTolerances tol = {});

/// Evaluates the primitive-variable boundary-condition forms for an
/// axis-aligned edge of a rectangular domain. The residuals vanish exactly
/// when the characteristic conditions w^- = R w^+ hold with zero external
/// data. Supported combinations: inflow regimes on the left/bottom edges,
/// low-Froude outflow on the right/top edges, three-condition inflow and
/// walls on any edge; free boundaries return an empty vector.
Eigen::VectorXd primitive_bc_residuals(const BCSpec& bc, const State& s, const UnitNormal& n,
                                       const PhysParams& p);

}  // namespace swe
