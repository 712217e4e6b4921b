#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "swe/bc_analysis.hpp"
#include "swe/simulation.hpp"

namespace swe {

// CSV emitters. Values are written with 17 significant digits so parsing an
// emitted file recovers the doubles exactly.

/// Header `time,energy,boundary_flux`, one row per recorded step.
void write_energy_csv(std::ostream& os, const EnergyReport& report);

/// Header `x,y,phi,u,v`, one row per node.
void write_field_csv(std::ostream& os, const Field& f);

/// Header `gamma,theta`, one row per boundary sample.
void write_ellipse_csv(std::ostream& os, const std::vector<std::array<double, 2>>& points);

/// Self-contained SVG plot of the energy-stable coefficient region. The
/// admissible region is drawn as a filled polygon whose points are written
/// in data coordinates inside a transformed group.
std::string ellipse_region_svg(double froude, EllipseKind kind, int nsamples);

}  // namespace swe
