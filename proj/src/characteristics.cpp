#include "swe/characteristics.hpp"

namespace swe {

double total_energy(const State& s, const PhysParams& p) {
  const double g2 = 2.0 * p.gravity;
  return s.phi * (s.u * s.u + s.v * s.v) / g2 + s.phi * s.phi / g2;
}

EntropyFluxes entropy_fluxes(const State& s, const PhysParams& p) {
  const double kin = (s.u * s.u + s.v * s.v) / (2.0 * p.gravity);
  const double pot = s.phi / p.gravity;
  return {s.phi * s.u * kin + s.phi * s.u * pot,
          s.phi * s.v * kin + s.phi * s.v * pot};
}

EigenSystem eigensystem(const State& s, const UnitNormal& n) {
  const double c = celerity(s);
  const double un = normal_velocity(s, n);
  const double r2 = 1.0 / std::sqrt(2.0);
  EigenSystem es;
  es.eigenvectors << r2,        0.0,   r2,
                     n.nx * r2, -n.ny, -n.nx * r2,
                     n.ny * r2, n.nx,  -n.ny * r2;
  es.transport << un + c, un, un - c;
  es.correction << 0.5 * c, 0.0, -0.5 * c;
  es.augmented << un + 0.5 * c, un, un - 0.5 * c;
  return es;
}

CharVars to_characteristic(const State& s, const UnitNormal& n, const PhysParams& p) {
  const double c = celerity(s);
  const double un = normal_velocity(s, n);
  const double us = tangential_velocity(s, n);
  const double scale = 1.0 / (2.0 * std::sqrt(p.gravity));
  return {scale * (s.phi + c * un),
          scale * (c * std::sqrt(2.0) * us),
          scale * (s.phi - c * un)};
}

State from_characteristic(const CharVars& w, const UnitNormal& n, const PhysParams& p) {
  const double sg = std::sqrt(p.gravity);
  const double phi = sg * (w.w1 + w.w3);
  if (!(phi > 0.0)) throw NonPositiveGeopotential(phi);
  const double c = std::sqrt(phi);
  const double un = sg * (w.w1 - w.w3) / c;
  const double us = std::sqrt(2.0 * p.gravity) * w.w2 / c;
  return State{phi, un * n.nx - us * n.ny, un * n.ny + us * n.nx};
}

double boundary_integrand(const State& s, const UnitNormal& n, const PhysParams& p) {
  const CharVars w = to_characteristic(s, n, p);
  const double c = celerity(s);
  const double un = normal_velocity(s, n);
  return (un + 0.5 * c) * w.w1 * w.w1 + un * w.w2 * w.w2 + (un - 0.5 * c) * w.w3 * w.w3;
}

}  // namespace swe
