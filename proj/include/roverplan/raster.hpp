#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace roverplan {

// Flat binary rasters: little-endian float32, row-major, no header.
// Shape is carried by the scenario manifest.
std::vector<float> read_f32_raster(const std::string& path, std::size_t expected_count);
void write_f32_raster(const std::string& path, const std::vector<float>& values);

}  // namespace roverplan
