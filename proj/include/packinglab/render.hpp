#pragma once

#include <string>

#include "packinglab/orbit.hpp"

namespace packinglab {

struct Viewport {
  double cx = 0;
  double cy = 0;
  double half_width = 1.1;
  int size_px = 800;
  double min_radius_px = 0.5;
};

/// SVG of a planar packing. Circles are kept when they meet the viewport
/// square and their pixel radius is at least min_radius_px; lines are drawn as
/// chords of the square. Labels are the exact bend strings.
std::string render_svg(const Packing& p, const Viewport& vp, bool labels);

}  // namespace packinglab
