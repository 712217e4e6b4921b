#pragma once

#include "swe/types.hpp"

namespace swe {

/// Eigendecomposition of the normal-direction matrices. Columns of
/// `eigenvectors` are ordered (+, 0, -) and are orthonormal, so
///   Ahat = R diag(transport) R^T,  Nhat = R diag(correction) R^T.
/// `augmented` = transport - correction are the propagation speeds of the
/// boundary energy quadratic:
///   (u_n + c/2, u_n, u_n - c/2).
struct EigenSystem {
  Mat3 eigenvectors;
  Vec3 transport;   // u_n + c, u_n, u_n - c
  Vec3 correction;  // c/2, 0, -c/2
  Vec3 augmented;   // u_n + c/2, u_n, u_n - c/2
};

/// Scaled characteristic amplitudes w = R^T S q. The first/last components
/// carry the normal gravity-wave information, the middle one the tangential
/// velocity. w1 + w3 = phi / sqrt(g) > 0 for any admissible state.
struct CharVars {
  double w1;
  double w2;
  double w3;
};

struct EntropyFluxes {
  double fx;
  double fy;
};

/// Total energy density: kinetic plus potential,
///   (phi / 2g) (u^2 + v^2) + phi^2 / 2g.
/// Coincides with q^T P q for the norm matrix P.
double total_energy(const State& s, const PhysParams& p);

/// Energy flux components (fx, fy) of the auxiliary conservation law
///   e_t + fx_x + fy_y = 0.
EntropyFluxes entropy_fluxes(const State& s, const PhysParams& p);

EigenSystem eigensystem(const State& s, const UnitNormal& n);

CharVars to_characteristic(const State& s, const UnitNormal& n, const PhysParams& p);

/// Inverse of to_characteristic. Requires w1 + w3 > 0 (positive geopotential).
State from_characteristic(const CharVars& w, const UnitNormal& n, const PhysParams& p);

/// Pointwise boundary energy integrand in characteristic form,
///   lambda1 w1^2 + lambda2 w2^2 + lambda3 w3^2,
/// which equals the normal energy flux fx*nx + fy*ny.
double boundary_integrand(const State& s, const UnitNormal& n, const PhysParams& p);

}  // namespace swe
