#pragma once

#include "hypcr/jobspec.hpp"
#include "hypcr/moebius.hpp"

// Self-contained SVG output: the unit disc with marked boundary points and
// geodesics drawn as circular arcs orthogonal to the circle, grid-map images,
// and simple xy-curves.

namespace hypcr {

// Render a result envelope; style is one of "fixed-points", "grid", "curve".
// Throws std::invalid_argument when the envelope has no plottable payload.
std::string render_svg(const json& envelope, const std::string& style);

// Building blocks (used by the renderer and tests)
std::string svg_disc_with_points(const std::vector<BoundaryPoint>& points,
                                 const std::vector<std::pair<BoundaryPoint, BoundaryPoint>>&
                                     geodesics);
std::string svg_grid_image(const std::vector<cplx>& values, int stride);
std::string svg_curve(const std::vector<double>& xs, const std::vector<double>& ys,
                      const std::string& xlabel, const std::string& ylabel);

}  // namespace hypcr
