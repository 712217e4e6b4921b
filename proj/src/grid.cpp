#include "swe/grid.hpp"

namespace swe {

Grid make_grid(double a, double b, int nx, int ny) {
  if (!(a > 0.0) || !(b > 0.0))
    throw BadGridSpec("domain extents must be positive");
  if (nx < 8 || ny < 8)
    throw BadGridSpec("cell counts must be at least 8 in each direction");
  return Grid{a, b, nx, ny};
}

bool Field::all_wet() const {
  for (double p : phi)
    if (!(p > 0.0)) return false;
  return true;
}

Field make_field(const Grid& g, const PhysParams& p, const State& fill) {
  Field f;
  f.grid = g;
  f.params = p;
  const auto n = static_cast<std::size_t>(g.node_count());
  f.phi.assign(n, fill.phi);
  f.u.assign(n, fill.u);
  f.v.assign(n, fill.v);
  return f;
}

}  // namespace swe
