#include "swe/bc_analysis.hpp"

#include <algorithm>
#include <cmath>

#include "swe/characteristics.hpp"

namespace swe {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool axis_aligned(double value, double target) { return std::abs(value - target) <= 1e-12; }

void check_band(double fr) {
  if (!(fr > 0.0) || !(fr < 0.5)) throw OutOfRegime(fr);
}

}  // namespace

const char* to_string(Regime r) {
  switch (r) {
    case Regime::SupercriticalInflow: return "supercritical_inflow";
    case Regime::SupercriticalOutflow: return "supercritical_outflow";
    case Regime::SubcriticalInflowLowFr: return "subcritical_inflow_low_fr";
    case Regime::SubcriticalInflowHighFr: return "subcritical_inflow_high_fr";
    case Regime::SubcriticalOutflowLowFr: return "subcritical_outflow_low_fr";
    case Regime::SubcriticalOutflowHighFr: return "subcritical_outflow_high_fr";
    case Regime::Wall: return "wall";
  }
  return "unknown";
}

Regime regime_from_string(std::string_view name) {
  for (Regime r : {Regime::SupercriticalInflow, Regime::SupercriticalOutflow,
                   Regime::SubcriticalInflowLowFr, Regime::SubcriticalInflowHighFr,
                   Regime::SubcriticalOutflowLowFr, Regime::SubcriticalOutflowHighFr,
                   Regime::Wall}) {
    if (name == to_string(r)) return r;
  }
  throw std::invalid_argument("unknown regime name: " + std::string(name));
}

double froude(const State& s, const UnitNormal& n) {
  return std::abs(normal_velocity(s, n)) / celerity(s);
}

Vec3 augmented_eigenvalues(const State& s, const UnitNormal& n) {
  const double c = celerity(s);
  const double un = normal_velocity(s, n);
  return Vec3(un + 0.5 * c, un, un - 0.5 * c);
}

Regime classify(const State& s, const UnitNormal& n, ClassifyTolerances tol) {
  const double c = celerity(s);
  const double un = normal_velocity(s, n);
  const double wall_tol = tol.wall_tol < 0.0 ? 1e-12 * c : tol.wall_tol;
  if (std::abs(un) <= wall_tol) return Regime::Wall;

  const double fr = std::abs(un) / c;
  if (std::abs(fr - 0.5) <= tol.fr_tol * 0.5 || std::abs(fr - 1.0) <= tol.fr_tol)
    throw AmbiguousRegime(fr);

  const bool inflow = un < 0.0;
  if (fr > 1.0) return inflow ? Regime::SupercriticalInflow : Regime::SupercriticalOutflow;
  if (inflow)
    return fr < 0.5 ? Regime::SubcriticalInflowLowFr : Regime::SubcriticalInflowHighFr;
  return fr < 0.5 ? Regime::SubcriticalOutflowLowFr : Regime::SubcriticalOutflowHighFr;
}

int required_bc_count(Regime r) {
  switch (r) {
    case Regime::SupercriticalInflow:
    case Regime::SubcriticalInflowHighFr: return 3;
    case Regime::SubcriticalInflowLowFr: return 2;
    case Regime::SubcriticalOutflowLowFr:
    case Regime::Wall: return 1;
    case Regime::SubcriticalOutflowHighFr:
    case Regime::SupercriticalOutflow: return 0;
  }
  return 0;
}

namespace {

struct Partition {
  std::vector<int> incoming;
  std::vector<int> outgoing;
};

Partition partition_for(Regime r) {
  switch (r) {
    case Regime::SupercriticalInflow:
    case Regime::SubcriticalInflowHighFr: return {{0, 1, 2}, {}};
    case Regime::SubcriticalInflowLowFr: return {{1, 2}, {0}};
    case Regime::SubcriticalOutflowLowFr:
    case Regime::Wall: return {{2}, {0, 1}};
    case Regime::SubcriticalOutflowHighFr:
    case Regime::SupercriticalOutflow: return {{}, {0, 1, 2}};
  }
  return {};
}

}  // namespace

BCSpec build_bc(Regime r, std::span<const double> coefficients,
                std::optional<double> validate_froude) {
  const bool takes_coeffs =
      r == Regime::SubcriticalInflowLowFr || r == Regime::SubcriticalOutflowLowFr;
  const std::size_t expected = takes_coeffs ? 2 : 0;
  if (coefficients.size() != expected) {
    throw WrongCoefficientCount(std::string("regime ") + to_string(r) + " takes " +
                                std::to_string(expected) + " coefficients, got " +
                                std::to_string(coefficients.size()));
  }

  BCSpec bc;
  bc.regime = r;
  auto part = partition_for(r);
  bc.incoming = std::move(part.incoming);
  bc.outgoing = std::move(part.outgoing);
  bc.reflection = Eigen::MatrixXd::Zero(static_cast<int>(bc.incoming.size()),
                                        static_cast<int>(bc.outgoing.size()));
  bc.external_data = Eigen::VectorXd::Zero(static_cast<int>(bc.incoming.size()));

  switch (r) {
    case Regime::SubcriticalInflowLowFr:
      bc.reflection(0, 0) = coefficients[0];  // w2 = gamma w1
      bc.reflection(1, 0) = coefficients[1];  // w3 = theta w1
      if (validate_froude &&
          !inflow_ellipse_contains(*validate_froude, coefficients[0], coefficients[1])) {
        throw UnstableCoefficients(
            "inflow coefficients fail the sufficient energy-stability condition at Fr = " +
            std::to_string(*validate_froude) +
            " (the condition is sufficient, not necessary, so such choices are not "
            "excluded outright)");
      }
      break;
    case Regime::SubcriticalOutflowLowFr:
      bc.reflection(0, 0) = coefficients[0];  // w3 = gamma w1 + theta w2
      bc.reflection(0, 1) = coefficients[1];
      if (validate_froude &&
          !outflow_ellipse_contains(*validate_froude, coefficients[0], coefficients[1])) {
        throw UnstableCoefficients(
            "outflow coefficients fail the sufficient energy-stability condition at Fr = " +
            std::to_string(*validate_froude) +
            " (the condition is sufficient, not necessary, so such choices are not "
            "excluded outright)");
      }
      break;
    case Regime::Wall:
      bc.reflection(0, 0) = 1.0;  // w3 = w1, i.e. u_n = 0
      break;
    default:
      break;  // empty reflection: data-only or free boundary
  }
  return bc;
}

StabilityResult stability_check(const BCSpec& bc, const Vec3& lambda) {
  const int nin = static_cast<int>(bc.incoming.size());
  const int nout = static_cast<int>(bc.outgoing.size());
  if (bc.reflection.rows() != nin || bc.reflection.cols() != nout)
    throw PartitionMismatch("reflection matrix shape does not match the partition");

  const double scale = std::max(1.0, lambda.cwiseAbs().maxCoeff());
  const double tol = 1e-12 * scale;
  for (int i : bc.incoming)
    if (lambda(i) > tol)
      throw PartitionMismatch("incoming index " + std::to_string(i + 1) +
                              " has a positive augmented eigenvalue");
  for (int i : bc.outgoing)
    if (lambda(i) < -tol)
      throw PartitionMismatch("outgoing index " + std::to_string(i + 1) +
                              " has a negative augmented eigenvalue");

  if (nout == 0) return {true, 0.0};

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(nout, nout);
  for (int j = 0; j < nout; ++j) m(j, j) = lambda(bc.outgoing[j]);
  if (nin > 0) {
    Eigen::VectorXd lam_in(nin);
    for (int i = 0; i < nin; ++i) lam_in(i) = lambda(bc.incoming[i]);
    m += bc.reflection.transpose() * lam_in.asDiagonal() * bc.reflection;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const double margin = es.eigenvalues().minCoeff();
  return {margin >= 0.0, margin};
}

bool inflow_ellipse_contains(double fr, double gamma, double theta) {
  check_band(fr);
  return gamma * gamma * fr + theta * theta * (0.5 + fr) <= 0.5 - fr;
}

bool outflow_ellipse_contains(double fr, double gamma, double theta) {
  check_band(fr);
  return gamma * gamma * fr * (0.5 - fr) + theta * theta * (0.5 + fr) * (0.5 - fr) <=
         fr * (0.5 + fr);
}

EllipseAxes ellipse_semi_axes(double fr, EllipseKind kind) {
  check_band(fr);
  if (kind == EllipseKind::Inflow)
    return {std::sqrt((0.5 - fr) / fr), std::sqrt((0.5 - fr) / (0.5 + fr))};
  return {std::sqrt((0.5 + fr) / (0.5 - fr)), std::sqrt(fr / (0.5 - fr))};
}

std::vector<std::array<double, 2>> ellipse_boundary(double fr, EllipseKind kind, int nsamples) {
  check_band(fr);
  if (nsamples < 3) throw std::invalid_argument("ellipse_boundary needs at least 3 samples");
  const EllipseAxes ax = ellipse_semi_axes(fr, kind);
  std::vector<std::array<double, 2>> pts;
  pts.reserve(static_cast<std::size_t>(nsamples));
  for (int k = 0; k < nsamples; ++k) {
    const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(nsamples);
    pts.push_back({ax.gamma * std::cos(t), ax.theta * std::sin(t)});
  }
  return pts;
}

AnalysisComparison compare_analyses(const State& s, const UnitNormal& n,
                                    ClassifyTolerances tol) {
  const Regime regime = classify(s, n, tol);
  const double c = celerity(s);
  const double un = normal_velocity(s, n);
  const double wall_tol = tol.wall_tol < 0.0 ? 1e-12 * c : tol.wall_tol;

  int linear = 0;
  for (double lam : {un + c, un, un - c})
    if (lam < 0.0) ++linear;

  return {required_bc_count(regime), linear, un < -wall_tol ? 3 : 0, regime};
}

Eigen::VectorXd primitive_bc_residuals(const BCSpec& bc, const State& s, const UnitNormal& n,
                                       const PhysParams&) {
  enum class Edge { Left, Right, Bottom, Top };
  Edge edge;
  if (axis_aligned(n.nx, -1.0) && axis_aligned(n.ny, 0.0)) edge = Edge::Left;
  else if (axis_aligned(n.nx, 1.0) && axis_aligned(n.ny, 0.0)) edge = Edge::Right;
  else if (axis_aligned(n.nx, 0.0) && axis_aligned(n.ny, -1.0)) edge = Edge::Bottom;
  else if (axis_aligned(n.nx, 0.0) && axis_aligned(n.ny, 1.0)) edge = Edge::Top;
  else throw std::invalid_argument("primitive_bc_residuals requires an axis-aligned normal");

  const double c = celerity(s);
  const double r2 = std::sqrt(2.0);
  Eigen::VectorXd res;

  switch (bc.regime) {
    case Regime::SupercriticalInflow:
    case Regime::SubcriticalInflowHighFr:
      res.resize(3);
      res << s.phi, s.u, s.v;
      break;
    case Regime::SubcriticalInflowLowFr: {
      const double gamma = bc.reflection(0, 0), theta = bc.reflection(1, 0);
      res.resize(2);
      if (edge == Edge::Left) {
        res << c * s.v * r2 + gamma * (s.phi - c * s.u),
               s.phi * (1.0 - theta) + c * s.u * (1.0 + theta);
      } else if (edge == Edge::Bottom) {
        res << c * s.u * r2 - gamma * (s.phi - c * s.v),
               s.phi * (1.0 - theta) + c * s.v * (1.0 + theta);
      } else {
        throw std::invalid_argument(
            "no primitive form for low-Froude inflow on an outflow-side edge");
      }
      break;
    }
    case Regime::SubcriticalOutflowLowFr: {
      const double gamma = bc.reflection(0, 0), theta = bc.reflection(0, 1);
      res.resize(1);
      if (edge == Edge::Right) {
        res << s.phi * (1.0 - gamma) - c * s.u * (1.0 + gamma) - theta * c * s.v * r2;
      } else if (edge == Edge::Top) {
        res << s.phi * (1.0 - gamma) - c * s.v * (1.0 + gamma) + theta * c * s.u * r2;
      } else {
        throw std::invalid_argument(
            "no primitive form for low-Froude outflow on an inflow-side edge");
      }
      break;
    }
    case Regime::Wall:
      res.resize(1);
      res << normal_velocity(s, n);
      break;
    case Regime::SupercriticalOutflow:
    case Regime::SubcriticalOutflowHighFr:
      res.resize(0);
      break;
  }
  return res;
}

}  // namespace swe
