#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace swe {

using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;

/// Physical parameters of the model. Gravity must be positive; the Coriolis
/// parameter may take either sign (zero disables rotation).
struct PhysParams {
  double gravity = 9.81;
  double coriolis = 0.0;
};

/// Pointwise solution value: geopotential (gravity times depth) and the two
/// velocity components. The geopotential must stay positive; states are
/// created through make_state which enforces this.
struct State {
  double phi;
  double u;
  double v;
};

/// Outward boundary direction, stored normalized.
struct UnitNormal {
  double nx;
  double ny;
};

struct NonPositiveGeopotential : std::domain_error {
  explicit NonPositiveGeopotential(double phi)
      : std::domain_error("non-positive geopotential: phi = " + std::to_string(phi)) {}
};

struct BadNormal : std::invalid_argument {
  BadNormal() : std::invalid_argument("normal direction must have nonzero finite length") {}
};

struct BadParams : std::invalid_argument {
  explicit BadParams(const std::string& what) : std::invalid_argument(what) {}
};

inline State make_state(double phi, double u, double v) {
  if (!(phi > 0.0)) throw NonPositiveGeopotential(phi);
  return State{phi, u, v};
}

/// Normalizes (nx, ny); throws BadNormal for zero or non-finite input.
inline UnitNormal make_unit_normal(double nx, double ny) {
  const double len = std::hypot(nx, ny);
  if (!(len > 0.0) || !std::isfinite(len)) throw BadNormal();
  return UnitNormal{nx / len, ny / len};
}

inline void validate_params(const PhysParams& p) {
  if (!(p.gravity > 0.0)) throw BadParams("gravity must be positive");
  if (!std::isfinite(p.coriolis)) throw BadParams("coriolis parameter must be finite");
}

/// Gravity-wave speed sqrt(phi).
inline double celerity(const State& s) { return std::sqrt(s.phi); }

/// Velocity component along the outward normal; negative means inflow.
inline double normal_velocity(const State& s, const UnitNormal& n) {
  return s.u * n.nx + s.v * n.ny;
}

/// Velocity component along the boundary tangent.
inline double tangential_velocity(const State& s, const UnitNormal& n) {
  return s.v * n.nx - s.u * n.ny;
}

}  // namespace swe
