#include "swe/io.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace swe {

namespace {

std::ostream& full_precision(std::ostream& os) {
  os << std::setprecision(17);
  return os;
}

}  // namespace

void write_energy_csv(std::ostream& os, const EnergyReport& report) {
  full_precision(os) << "time,energy,boundary_flux\n";
  for (std::size_t k = 0; k < report.times.size(); ++k) {
    os << report.times[k] << ',' << report.energy[k] << ',' << report.boundary_flux[k] << '\n';
  }
}

void write_field_csv(std::ostream& os, const Field& f) {
  full_precision(os) << "x,y,phi,u,v\n";
  const Grid& g = f.grid;
  for (int j = 0; j < g.npy(); ++j) {
    for (int i = 0; i < g.npx(); ++i) {
      const int k = g.index(i, j);
      os << g.x(i) << ',' << g.y(j) << ',' << f.phi[k] << ',' << f.u[k] << ',' << f.v[k]
         << '\n';
    }
  }
}

void write_ellipse_csv(std::ostream& os, const std::vector<std::array<double, 2>>& points) {
  full_precision(os) << "gamma,theta\n";
  for (const auto& pt : points) os << pt[0] << ',' << pt[1] << '\n';
}

std::string ellipse_region_svg(double froude, EllipseKind kind, int nsamples) {
  const auto pts = ellipse_boundary(froude, kind, nsamples);
  const EllipseAxes ax = ellipse_semi_axes(froude, kind);

  const double span_g = 1.25 * ax.gamma;
  const double span_t = 1.25 * ax.theta;
  const int width = 640, height = 480;
  const int margin = 56;
  const double sx = (width - 2.0 * margin) / (2.0 * span_g);
  const double sy = (height - 2.0 * margin) / (2.0 * span_t);

  std::ostringstream svg;
  svg << std::setprecision(12);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  // axes in screen coordinates
  const double cx = width / 2.0, cy = height / 2.0;
  svg << "  <line x1=\"" << margin << "\" y1=\"" << cy << "\" x2=\"" << width - margin
      << "\" y2=\"" << cy << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  svg << "  <line x1=\"" << cx << "\" y1=\"" << margin << "\" x2=\"" << cx << "\" y2=\""
      << height - margin << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";

  // admissible region; polygon points are in (gamma, theta) data coordinates
  svg << "  <g transform=\"translate(" << cx << ' ' << cy << ") scale(" << sx << ' ' << -sy
      << ")\">\n";
  svg << "    <polygon vector-effect=\"non-scaling-stroke\" fill=\"#9ecae1\" fill-opacity=\"0.65\""
      << " stroke=\"#3182bd\" stroke-width=\"1.5\" points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k) svg << ' ';
    svg << pts[k][0] << ',' << pts[k][1];
  }
  svg << "\"/>\n  </g>\n";

  // semi-axis tick labels
  auto label = [&](double gx, double ty, double value) {
    svg << "  <text x=\"" << cx + gx * sx + 4 << "\" y=\"" << cy - ty * sy - 4
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">"
        << std::setprecision(6) << value << std::setprecision(12) << "</text>\n";
  };
  label(ax.gamma, 0.0, ax.gamma);
  label(0.0, ax.theta, ax.theta);

  svg << "  <text x=\"" << width - margin + 6 << "\" y=\"" << cy + 4
      << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#000\">gamma</text>\n";
  svg << "  <text x=\"" << cx - 18 << "\" y=\"" << margin - 10
      << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#000\">theta</text>\n";
  svg << "  <text x=\"" << margin << "\" y=\"" << 24
      << "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#000\">energy-stable "
      << (kind == EllipseKind::Inflow ? "inflow" : "outflow")
      << " coefficients, Fr = " << std::setprecision(6) << froude << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace swe
