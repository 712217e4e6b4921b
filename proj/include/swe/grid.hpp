#pragma once

#include <vector>

#include "swe/types.hpp"

namespace swe {

struct BadGridSpec : std::invalid_argument {
  explicit BadGridSpec(const std::string& what) : std::invalid_argument(what) {}
};

/// Uniform tensor grid of nodes on the rectangle [0, a] x [0, b] with
/// nx by ny cells, i.e. (nx + 1) by (ny + 1) nodes.
struct Grid {
  double a = 1.0;
  double b = 1.0;
  int nx = 8;
  int ny = 8;

  double dx() const { return a / nx; }
  double dy() const { return b / ny; }
  int npx() const { return nx + 1; }
  int npy() const { return ny + 1; }
  int node_count() const { return npx() * npy(); }
  double x(int i) const { return a * static_cast<double>(i) / nx; }
  double y(int j) const { return b * static_cast<double>(j) / ny; }
  int index(int i, int j) const { return j * npx() + i; }
};

Grid make_grid(double a, double b, int nx, int ny);

enum class Edge { Left = 0, Right = 1, Bottom = 2, Top = 3 };

inline UnitNormal edge_normal(Edge e) {
  switch (e) {
    case Edge::Left: return {-1.0, 0.0};
    case Edge::Right: return {1.0, 0.0};
    case Edge::Bottom: return {0.0, -1.0};
    case Edge::Top: return {0.0, 1.0};
  }
  return {1.0, 0.0};
}

constexpr std::array<Edge, 4> kAllEdges{Edge::Left, Edge::Right, Edge::Bottom, Edge::Top};

/// Nodal solution values over a grid. Also used for tendencies, so the
/// entries are not constrained here; all_wet() reports whether the field is
/// an admissible solution state.
struct Field {
  Grid grid;
  PhysParams params;
  std::vector<double> phi, u, v;

  State at(int i, int j) const {
    const int k = grid.index(i, j);
    return State{phi[k], u[k], v[k]};
  }
  void set(int i, int j, const State& s) {
    const int k = grid.index(i, j);
    phi[k] = s.phi;
    u[k] = s.u;
    v[k] = s.v;
  }
  bool all_wet() const;
};

Field make_field(const Grid& g, const PhysParams& p, const State& fill);

}  // namespace swe
