#pragma once

#include <cstdint>
#include <vector>

#include "roverplan/types.hpp"

namespace roverplan {

// Gridded terrain. Slope is derived from elevation by central differences
// (one-sided at the boundary); a cell is traversable iff its slope does not
// exceed slope_limit_deg.
struct TerrainGrid {
  int width = 0;
  int height = 0;
  double resolution = 0.0;       // m per cell edge
  double slope_limit_deg = 20.0;
  std::vector<double> elevation;   // row-major, metres
  std::vector<double> slope_deg;   // derived
  std::vector<std::uint8_t> traversable;  // derived

  static TerrainGrid build(int width, int height, double resolution,
                           std::vector<double> elevation, double slope_limit_deg);

  std::size_t idx(Cell c) const { return static_cast<std::size_t>(c.y) * width + c.x; }
  bool in_bounds(Cell c) const {
    return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height;
  }
  bool is_traversable(Cell c) const {
    return in_bounds(c) && traversable[idx(c)] != 0;
  }
};

// 3-D drive distance between 8-adjacent cells:
// sqrt(planar^2 + delta_elevation^2). Throws on non-adjacent pairs.
double drive_distance(Cell from, Cell to, const TerrainGrid& terrain);

}  // namespace roverplan
