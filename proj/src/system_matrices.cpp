#include "swe/system_matrices.hpp"

namespace swe {

std::pair<Mat3, Mat3> flux_matrices(const State& s) {
  Mat3 a, b;
  a << s.u, s.phi, 0.0,
       1.0, s.u,   0.0,
       0.0, 0.0,   s.u;
  b << s.v, 0.0, s.phi,
       0.0, s.v, 0.0,
       1.0, 0.0, s.v;
  return {a, b};
}

Mat3 coriolis_matrix(const PhysParams& p) {
  Mat3 c = Mat3::Zero();
  c(1, 2) = p.coriolis;
  c(2, 1) = -p.coriolis;
  return c;
}

Mat3 symmetrizer(const State& s, const PhysParams& p) {
  const double kappa = 1.0 / std::sqrt(2.0 * p.gravity);
  const double c = celerity(s);
  return Vec3(kappa, kappa * c, kappa * c).asDiagonal();
}

Mat3 symmetrizer_inverse(const State& s, const PhysParams& p) {
  const double kinv = std::sqrt(2.0 * p.gravity);
  const double c = celerity(s);
  return Vec3(kinv, kinv / c, kinv / c).asDiagonal();
}

Mat3 norm_matrix(const State& s, const PhysParams& p) {
  const double w = 1.0 / (2.0 * p.gravity);
  return Vec3(w, w * s.phi, w * s.phi).asDiagonal();
}

std::pair<Mat3, Mat3> correction_matrices(const State& s) {
  Mat3 n1 = Mat3::Zero(), n2 = Mat3::Zero();
  n1(0, 1) = 0.5 * s.phi;
  n1(1, 0) = 0.5;
  n2(0, 2) = 0.5 * s.phi;
  n2(2, 0) = 0.5;
  return {n1, n2};
}

std::pair<Mat3, Mat3> normal_matrices(const State& s, const UnitNormal& n) {
  const double c = celerity(s);
  const double un = normal_velocity(s, n);
  Mat3 ahat, nhat;
  ahat << un,       n.nx * c, n.ny * c,
          n.nx * c, un,       0.0,
          n.ny * c, 0.0,      un;
  const double hx = 0.5 * n.nx * c, hy = 0.5 * n.ny * c;
  nhat << 0.0, hx,  hy,
          hx,  0.0, 0.0,
          hy,  0.0, 0.0;
  return {ahat, nhat};
}

}  // namespace swe
