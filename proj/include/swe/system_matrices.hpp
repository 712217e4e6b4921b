#pragma once

#include <utility>

#include "swe/types.hpp"

namespace swe {

// System matrices of the non-conservative form
//   q_t + A(q) q_x + B(q) q_y + C q = 0,  q = (phi, u, v).
// Row/column order is (phi, u, v) throughout.

/// Quasilinear flux Jacobians (A, B).
std::pair<Mat3, Mat3> flux_matrices(const State& s);

/// Rotation term C; skew-symmetric by construction.
Mat3 coriolis_matrix(const PhysParams& p);

/// Diagonal matrix S that symmetrizes both flux Jacobians and scales the
/// solution so that |S q|^2 equals the total energy density.
Mat3 symmetrizer(const State& s, const PhysParams& p);

Mat3 symmetrizer_inverse(const State& s, const PhysParams& p);

/// P = S^2, the symmetric positive definite weight of the energy norm.
Mat3 norm_matrix(const State& s, const PhysParams& p);

/// Correction matrices (N1, N2). N1 commutes with A and N2 with B; they
/// absorb the non-divergence terms of the energy balance.
std::pair<Mat3, Mat3> correction_matrices(const State& s);

/// Symmetrized normal-direction matrices (Ahat, Nhat) for an outward unit
/// normal:
///   Ahat = S (A nx + B ny) S^-1,  Nhat = S (N1 nx + N2 ny) S^-1.
/// Both are symmetric, commute, and share the eigenvectors returned by
/// eigensystem().
std::pair<Mat3, Mat3> normal_matrices(const State& s, const UnitNormal& n);

}  // namespace swe
