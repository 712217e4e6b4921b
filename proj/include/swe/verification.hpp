#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "swe/types.hpp"

namespace swe {

/// Maximum residuals of the randomized identity suites. Each family is the
/// worst entrywise (or relative, with floor one) residual observed across
/// all trials:
///  - symmetrizer_symmetry: asymmetry of S A S^-1 and S B S^-1,
///  - commutation: Ahat Nhat - Nhat Ahat and the componentwise commutation
///    identities of the correction matrices,
///  - eigendecomposition: R R^T - I and reconstruction of the
///    product-form normal matrices from R and the eigenvalue sets,
///  - energy_norm_match: q^T P q against the total energy density,
///  - flux_quadratic_identity: characteristic quadratic against the normal
///    energy flux.
struct IdentityResiduals {
  double symmetrizer_symmetry = 0.0;
  double commutation = 0.0;
  double eigendecomposition = 0.0;
  double energy_norm_match = 0.0;
  double flux_quadratic_identity = 0.0;

  double max() const;
  /// (name, value) view over the five families, in a fixed order.
  std::array<std::pair<const char*, double>, 5> items() const;
};

/// Runs all identity families over `trials` random admissible states
/// (phi in [0.1, 10], |u|, |v| <= 5, gravity alternating between 1 and 9.81)
/// and random unit normals drawn from the seeded generator.
IdentityResiduals run_identity_suite(int trials, std::uint64_t seed);

}  // namespace swe
