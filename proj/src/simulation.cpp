#include "swe/simulation.hpp"

#include <algorithm>
#include <cmath>

#include "swe/characteristics.hpp"

namespace swe {

namespace {

struct Closures {
  bool left = false, right = false, bottom = false, top = false;  // reflect?
};

Closures resolve_closures(const EdgeConditions& bcs, const SimOptions& opt) {
  const bool use = opt.wall_closure == WallClosure::Reflect;
  return {use && bcs.left.regime == Regime::Wall, use && bcs.right.regime == Regime::Wall,
          use && bcs.bottom.regime == Regime::Wall, use && bcs.top.regime == Regime::Wall};
}

void check_bc_shape(const BCSpec& bc, const char* edge) {
  if (bc.reflection.rows() != static_cast<int>(bc.incoming.size()) ||
      bc.reflection.cols() != static_cast<int>(bc.outgoing.size()) ||
      bc.external_data.size() != static_cast<int>(bc.incoming.size()))
    throw PartitionMismatch(std::string("inconsistent boundary specification on edge ") + edge);
}

// Fourth-difference dissipation composed as D2^T (speed * D2) per direction.
// The composition telescopes exactly against the trapezoidal energy weights,
// so the leading-order energy contribution is non-positive and the total
// geopotential is conserved. Boundary closure: mirror ghosts on reflecting
// wall edges (keeps u_n pinned at zero), zero-padding elsewhere.
void add_fourth_difference_dissipation(const Field& f, Field& out, const Closures& cl,
                                       const SimOptions& opt) {
  const Grid& g = f.grid;
  const int nx = g.nx, ny = g.ny;
  const std::size_t n = f.phi.size();
  std::vector<double> mphi(n), mu(n), mv(n);

  struct Dir {
    bool x;
    double h;
    int count;        // node count along the sweep direction
    bool lo_reflect;  // reflecting closure at the low end
    bool hi_reflect;
  };
  const Dir dirs[2] = {{true, g.dx(), nx, cl.left, cl.right},
                       {false, g.dy(), ny, cl.bottom, cl.top}};

  for (const Dir& dir : dirs) {
    auto idx = [&](int along, int across) {
      return dir.x ? g.index(along, across) : g.index(across, along);
    };
    const int last = dir.count;
    const int across_count = dir.x ? g.npy() : g.npx();

    for (int a = 0; a < across_count; ++a) {
      for (int i = 0; i <= last; ++i) {
        const int k = idx(i, a);
        const double speed =
            (dir.x ? std::abs(f.u[k]) : std::abs(f.v[k])) + std::sqrt(f.phi[k]);
        double d2p, d2u, d2v;
        if (i > 0 && i < last) {
          const int km = idx(i - 1, a), kp = idx(i + 1, a);
          d2p = f.phi[km] - 2.0 * f.phi[k] + f.phi[kp];
          d2u = f.u[km] - 2.0 * f.u[k] + f.u[kp];
          d2v = f.v[km] - 2.0 * f.v[k] + f.v[kp];
        } else if (opt.periodic) {
          const int km = idx(i == 0 ? last - 1 : i - 1, a);
          const int kp = idx(i == last ? 1 : i + 1, a);
          d2p = f.phi[km] - 2.0 * f.phi[k] + f.phi[kp];
          d2u = f.u[km] - 2.0 * f.u[k] + f.u[kp];
          d2v = f.v[km] - 2.0 * f.v[k] + f.v[kp];
        } else if ((i == 0 && dir.lo_reflect) || (i == last && dir.hi_reflect)) {
          const int kn = idx(i == 0 ? 1 : last - 1, a);  // interior neighbor
          // even extension for phi and the tangential velocity, odd for the
          // normal one
          d2p = 2.0 * (f.phi[kn] - f.phi[k]);
          if (dir.x) {
            d2u = -2.0 * f.u[k];
            d2v = 2.0 * (f.v[kn] - f.v[k]);
          } else {
            d2u = 2.0 * (f.u[kn] - f.u[k]);
            d2v = -2.0 * f.v[k];
          }
        } else {
          d2p = d2u = d2v = 0.0;
        }
        mphi[k] = speed * d2p;
        mu[k] = speed * d2u;
        mv[k] = speed * d2v;
      }

      for (int i = 0; i <= last; ++i) {
        const int k = idx(i, a);
        double tp, tu, tv;  // D2^T applied to m, with the matching closure
        auto gather = [&](int off) -> std::array<double, 3> {
          const int q = i + off;
          if (q >= 0 && q <= last) {
            const int kq = idx(q, a);
            return {mphi[kq], mu[kq], mv[kq]};
          }
          if (opt.periodic) {
            const int kq = idx(q < 0 ? q + last : q - last, a);
            return {mphi[kq], mu[kq], mv[kq]};
          }
          if ((q < 0 && dir.lo_reflect) || (q > last && dir.hi_reflect)) {
            const int kq = idx(q < 0 ? -q : 2 * last - q, a);
            // mirrored m: components inherit the extension parity
            if (dir.x) return {mphi[kq], -mu[kq], mv[kq]};
            return {mphi[kq], mu[kq], -mv[kq]};
          }
          return {0.0, 0.0, 0.0};
        };
        const auto lo = gather(-1), hi = gather(+1);
        tp = lo[0] - 2.0 * mphi[k] + hi[0];
        tu = lo[1] - 2.0 * mu[k] + hi[1];
        tv = lo[2] - 2.0 * mv[k] + hi[2];

        // zero-padded ends pair against the half trapezoidal weight; mirror
        // ends are the doubled-domain operator restricted and keep the full
        // row weight
        double omega_hat = 1.0;
        if (!opt.periodic && i == 0 && !dir.lo_reflect) omega_hat = 0.5;
        if (!opt.periodic && i == last && !dir.hi_reflect) omega_hat = 0.5;
        const double weight = opt.dissipation / (dir.h * omega_hat);
        out.phi[k] -= weight * tp;
        out.u[k] -= weight * tu / f.phi[k];
        out.v[k] -= weight * tv / f.phi[k];
      }
    }
  }
}

}  // namespace

const char* to_string(SimStatus s) {
  switch (s) {
    case SimStatus::Completed: return "completed";
    case SimStatus::DryState: return "dry_state";
    case SimStatus::Diverged: return "diverged";
  }
  return "unknown";
}

double energy_norm(const Field& f) {
  const Grid& g = f.grid;
  double total = 0.0;
  for (int j = 0; j < g.npy(); ++j) {
    const double wy = (j == 0 || j == g.ny) ? 0.5 * g.dy() : g.dy();
    for (int i = 0; i < g.npx(); ++i) {
      const double wx = (i == 0 || i == g.nx) ? 0.5 * g.dx() : g.dx();
      total += wx * wy * total_energy(f.at(i, j), f.params);
    }
  }
  return total;
}

BoundaryAudit boundary_flux_audit(const Field& f) {
  const Grid& g = f.grid;
  BoundaryAudit audit;

  auto accumulate = [&](const State& s, const UnitNormal& n, double weight) {
    const auto [fx, fy] = entropy_fluxes(s, f.params);
    const double flux = fx * n.nx + fy * n.ny;
    const double quad = boundary_integrand(s, n, f.params);
    audit.flux_form += weight * flux;
    audit.quadratic_form += weight * quad;
    audit.max_node_mismatch = std::max(
        audit.max_node_mismatch, std::abs(quad - flux) / std::max(1.0, std::abs(flux)));
  };

  for (Edge e : {Edge::Left, Edge::Right}) {
    const int i = (e == Edge::Left) ? 0 : g.nx;
    const UnitNormal n = edge_normal(e);
    for (int j = 0; j < g.npy(); ++j) {
      const double w = (j == 0 || j == g.ny) ? 0.5 * g.dy() : g.dy();
      accumulate(f.at(i, j), n, w);
    }
  }
  for (Edge e : {Edge::Bottom, Edge::Top}) {
    const int j = (e == Edge::Bottom) ? 0 : g.ny;
    const UnitNormal n = edge_normal(e);
    for (int i = 0; i < g.npx(); ++i) {
      const double w = (i == 0 || i == g.nx) ? 0.5 * g.dx() : g.dx();
      accumulate(f.at(i, j), n, w);
    }
  }
  return audit;
}

double cfl_timestep(const Field& f, double cfl) {
  double speed = 0.0;
  for (std::size_t k = 0; k < f.phi.size(); ++k) {
    speed = std::max(speed, std::hypot(f.u[k], f.v[k]) + std::sqrt(f.phi[k]));
  }
  return cfl * std::min(f.grid.dx(), f.grid.dy()) / speed;
}

Field rhs(const Field& f, const EdgeConditions& bcs, const SimOptions& opt) {
  const Grid& g = f.grid;
  const PhysParams& p = f.params;
  check_bc_shape(bcs.left, "left");
  check_bc_shape(bcs.right, "right");
  check_bc_shape(bcs.bottom, "bottom");
  check_bc_shape(bcs.top, "top");

  Field out = make_field(g, p, State{0.0, 0.0, 0.0});
  const Closures cl = resolve_closures(bcs, opt);
  const int nx = g.nx, ny = g.ny;
  const double dx = g.dx(), dy = g.dy();
  const double i2dx = 1.0 / (2.0 * dx), i2dy = 1.0 / (2.0 * dy);
  const double fcor = p.coriolis;

  for (int j = 0; j <= ny; ++j) {
    for (int i = 0; i <= nx; ++i) {
      const int k = g.index(i, j);
      const double phi = f.phi[k], u = f.u[k], v = f.v[k];

      double px, ux, vx;
      if (opt.periodic) {
        const int im = g.index(i == 0 ? nx - 1 : i - 1, j);
        const int ip = g.index(i == nx ? 1 : i + 1, j);
        px = (f.phi[ip] - f.phi[im]) * i2dx;
        ux = (f.u[ip] - f.u[im]) * i2dx;
        vx = (f.v[ip] - f.v[im]) * i2dx;
      } else if (i == 0) {
        if (cl.left) {
          // ghost node mirrors the normal velocity: even phi/v, odd u
          px = 0.0;
          ux = f.u[g.index(1, j)] / dx;
          vx = 0.0;
        } else {
          const int kr = g.index(1, j);
          px = (f.phi[kr] - phi) / dx;
          ux = (f.u[kr] - u) / dx;
          vx = (f.v[kr] - v) / dx;
        }
      } else if (i == nx) {
        if (cl.right) {
          px = 0.0;
          ux = -f.u[g.index(nx - 1, j)] / dx;
          vx = 0.0;
        } else {
          const int kl = g.index(nx - 1, j);
          px = (phi - f.phi[kl]) / dx;
          ux = (u - f.u[kl]) / dx;
          vx = (v - f.v[kl]) / dx;
        }
      } else {
        const int kl = g.index(i - 1, j), kr = g.index(i + 1, j);
        px = (f.phi[kr] - f.phi[kl]) * i2dx;
        ux = (f.u[kr] - f.u[kl]) * i2dx;
        vx = (f.v[kr] - f.v[kl]) * i2dx;
      }

      double py, uy, vy;
      if (opt.periodic) {
        const int jm = g.index(i, j == 0 ? ny - 1 : j - 1);
        const int jp = g.index(i, j == ny ? 1 : j + 1);
        py = (f.phi[jp] - f.phi[jm]) * i2dy;
        uy = (f.u[jp] - f.u[jm]) * i2dy;
        vy = (f.v[jp] - f.v[jm]) * i2dy;
      } else if (j == 0) {
        if (cl.bottom) {
          py = 0.0;
          uy = 0.0;
          vy = f.v[g.index(i, 1)] / dy;
        } else {
          const int ku = g.index(i, 1);
          py = (f.phi[ku] - phi) / dy;
          uy = (f.u[ku] - u) / dy;
          vy = (f.v[ku] - v) / dy;
        }
      } else if (j == ny) {
        if (cl.top) {
          py = 0.0;
          uy = 0.0;
          vy = -f.v[g.index(i, ny - 1)] / dy;
        } else {
          const int kd = g.index(i, ny - 1);
          py = (phi - f.phi[kd]) / dy;
          uy = (u - f.u[kd]) / dy;
          vy = (v - f.v[kd]) / dy;
        }
      } else {
        const int kd = g.index(i, j - 1), ku = g.index(i, j + 1);
        py = (f.phi[ku] - f.phi[kd]) * i2dy;
        uy = (f.u[ku] - f.u[kd]) * i2dy;
        vy = (f.v[ku] - f.v[kd]) * i2dy;
      }

      out.phi[k] = -(u * px + v * py + phi * (ux + vy));
      out.u[k] = -(u * ux + v * uy + px + fcor * v);
      out.v[k] = -(u * vx + v * vy + py - fcor * u);
    }
  }

  if (opt.dissipation > 0.0) add_fourth_difference_dissipation(f, out, cl, opt);

  if (opt.periodic) return out;

  if (opt.strict_regimes) {
    for (Edge e : kAllEdges) {
      const BCSpec& bc = bcs[e];
      const UnitNormal n = edge_normal(e);
      const bool vertical = (e == Edge::Left || e == Edge::Right);
      const int count = vertical ? g.npy() : g.npx();
      for (int t = 0; t < count; ++t) {
        const int i = vertical ? ((e == Edge::Left) ? 0 : nx) : t;
        const int j = vertical ? t : ((e == Edge::Bottom) ? 0 : ny);
        try {
          if (classify(f.at(i, j), n, opt.classify_tol) != bc.regime)
            throw RegimeMismatch(std::string("boundary node left its configured regime on edge ") +
                                 std::to_string(static_cast<int>(e)));
        } catch (const AmbiguousRegime&) {
          throw RegimeMismatch("boundary node regime became ambiguous in strict mode");
        }
      }
    }
  }

  auto apply_penalty = [&](Edge e) {
    const BCSpec& bc = bcs[e];
    const int nin = static_cast<int>(bc.incoming.size());
    if (nin == 0) return;  // free boundary or purely outgoing: no penalty
    const int nout = static_cast<int>(bc.outgoing.size());
    const UnitNormal n = edge_normal(e);
    const bool vertical = (e == Edge::Left || e == Edge::Right);
    const double omega = vertical ? 0.5 * dx : 0.5 * dy;  // boundary quadrature weight
    const int count = vertical ? g.npy() : g.npx();

    for (int t = 0; t < count; ++t) {
      int i, j;
      if (vertical) {
        i = (e == Edge::Left) ? 0 : nx;
        j = t;
      } else {
        i = t;
        j = (e == Edge::Bottom) ? 0 : ny;
      }
      const State s = f.at(i, j);
      const EigenSystem es = eigensystem(s, n);
      const CharVars w = to_characteristic(s, n, p);
      const Vec3 wv(w.w1, w.w2, w.w3);

      Vec3 lifted = Vec3::Zero();
      for (int r = 0; r < nin; ++r) {
        double residual = wv(bc.incoming[static_cast<std::size_t>(r)]) - bc.external_data(r);
        for (int cidx = 0; cidx < nout; ++cidx)
          residual -= bc.reflection(r, cidx) * wv(bc.outgoing[static_cast<std::size_t>(cidx)]);
        const double strength =
            opt.penalty * std::abs(es.augmented(bc.incoming[static_cast<std::size_t>(r)]));
        lifted(bc.incoming[static_cast<std::size_t>(r)]) = strength * residual;
      }

      const Vec3 wspace = es.eigenvectors * lifted;
      const double kinv = std::sqrt(2.0 * p.gravity);
      const double c = celerity(s);
      const int k = g.index(i, j);
      out.phi[k] -= kinv * wspace(0) / omega;
      out.u[k] -= (kinv / c) * wspace(1) / omega;
      out.v[k] -= (kinv / c) * wspace(2) / omega;
    }
  };

  for (Edge e : kAllEdges) apply_penalty(e);
  return out;
}

namespace {

Field stage_state(const Field& base, double scale, const Field& rate) {
  Field out = base;
  const std::size_t n = out.phi.size();
  for (std::size_t k = 0; k < n; ++k) {
    out.phi[k] += scale * rate.phi[k];
    out.u[k] += scale * rate.u[k];
    out.v[k] += scale * rate.v[k];
  }
  return out;
}

struct DryStage {};

void require_wet(const Field& f) {
  if (!f.all_wet()) throw DryStage{};
}

void log_regimes(EnergyReport& report, const Field& f, const EdgeConditions& bcs,
                 const SimOptions& opt) {
  const Grid& g = f.grid;
  for (Edge e : kAllEdges) {
    const BCSpec& bc = bcs[e];
    const UnitNormal n = edge_normal(e);
    const bool vertical = (e == Edge::Left || e == Edge::Right);
    const int count = vertical ? g.npy() : g.npx();
    EdgeRegimeLogEntry entry{bc.regime, 0, 0};
    for (int t = 0; t < count; ++t) {
      const int i = vertical ? ((e == Edge::Left) ? 0 : g.nx) : t;
      const int j = vertical ? t : ((e == Edge::Bottom) ? 0 : g.ny);
      try {
        const Regime r = classify(f.at(i, j), n, opt.classify_tol);
        if (r != bc.regime) ++entry.mismatched;
        if (t == count / 2) entry.midpoint = r;
      } catch (const AmbiguousRegime&) {
        ++entry.ambiguous;
      }
    }
    report.edge_log[static_cast<std::size_t>(e)].push_back(entry);
  }
}

}  // namespace

SimResult integrate(const Field& initial, const EdgeConditions& bcs, double dt, int nsteps,
                    const SimOptions& opt) {
  SimResult res;
  res.final_field = initial;
  if (!initial.all_wet()) {
    res.status = SimStatus::DryState;
    res.message = "initial field has non-positive geopotential";
    return res;
  }
  if (!(dt > 0.0) || nsteps < 0) throw std::invalid_argument("integrate needs dt > 0, nsteps >= 0");

  res.report.cfl_exceeded = dt > cfl_timestep(initial, opt.advisory_cfl) * (1.0 + 1e-9);

  const double e0 = energy_norm(initial);
  auto record = [&](double t, const Field& f, double energy) {
    res.report.times.push_back(t);
    res.report.energy.push_back(energy);
    res.report.boundary_flux.push_back(opt.periodic ? 0.0 : boundary_flux_audit(f).flux_form);
    if (!opt.periodic) log_regimes(res.report, f, bcs, opt);
  };
  record(0.0, initial, e0);

  Field q = initial;
  for (int step = 1; step <= nsteps; ++step) {
    const double t = dt * static_cast<double>(step);
    try {
      const Field k1 = rhs(q, bcs, opt);
      Field qs = stage_state(q, 0.5 * dt, k1);
      require_wet(qs);
      const Field k2 = rhs(qs, bcs, opt);
      qs = stage_state(q, 0.5 * dt, k2);
      require_wet(qs);
      const Field k3 = rhs(qs, bcs, opt);
      qs = stage_state(q, dt, k3);
      require_wet(qs);
      const Field k4 = rhs(qs, bcs, opt);

      const std::size_t nnode = q.phi.size();
      const double w = dt / 6.0;
      for (std::size_t k = 0; k < nnode; ++k) {
        q.phi[k] += w * (k1.phi[k] + 2.0 * k2.phi[k] + 2.0 * k3.phi[k] + k4.phi[k]);
        q.u[k] += w * (k1.u[k] + 2.0 * k2.u[k] + 2.0 * k3.u[k] + k4.u[k]);
        q.v[k] += w * (k1.v[k] + 2.0 * k2.v[k] + 2.0 * k3.v[k] + k4.v[k]);
      }
    } catch (const DryStage&) {
      res.status = SimStatus::DryState;
      res.message = "geopotential lost positivity during step " + std::to_string(step);
      res.final_field = q;
      return res;
    }

    if (!q.all_wet()) {
      res.status = SimStatus::DryState;
      res.message = "geopotential lost positivity after step " + std::to_string(step);
      res.final_field = q;
      return res;
    }
    const double energy = energy_norm(q);
    if (!std::isfinite(energy)) {
      res.status = SimStatus::Diverged;
      res.message = "energy became non-finite at step " + std::to_string(step);
      res.final_field = q;
      return res;
    }
    record(t, q, energy);
    if (energy > 1e6 * e0) {
      res.status = SimStatus::Diverged;
      res.message = "energy exceeded 1e6 times its initial value at step " + std::to_string(step);
      res.final_field = q;
      return res;
    }
  }

  res.final_field = q;
  res.status = SimStatus::Completed;
  return res;
}

Field build_initial_field(const Grid& g, const PhysParams& p, const InitialConditions& ic) {
  validate_params(p);
  if (!(ic.phi0 > 0.0)) throw NonPositiveGeopotential(ic.phi0);
  const bool bump = ic.preset != InitialPreset::UniformStream;
  const bool stream = ic.preset != InitialPreset::RestBump;
  if (bump && !(ic.width > 0.0))
    throw std::invalid_argument("bump width must be positive");

  Field f = make_field(g, p, State{ic.phi0, stream ? ic.u0 : 0.0, stream ? ic.v0 : 0.0});
  if (bump) {
    const double inv2w2 = 1.0 / (2.0 * ic.width * ic.width);
    for (int j = 0; j < g.npy(); ++j) {
      for (int i = 0; i < g.npx(); ++i) {
        const double ddx = g.x(i) - ic.cx, ddy = g.y(j) - ic.cy;
        f.phi[g.index(i, j)] += ic.amplitude * std::exp(-(ddx * ddx + ddy * ddy) * inv2w2);
      }
    }
  }
  if (!f.all_wet()) {
    double mn = f.phi[0];
    for (double x : f.phi) mn = std::min(mn, x);
    throw NonPositiveGeopotential(mn);
  }
  return f;
}

}  // namespace swe
