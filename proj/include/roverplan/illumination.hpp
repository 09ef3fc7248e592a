#pragma once

#include <vector>

#include "roverplan/types.hpp"

namespace roverplan {

inline constexpr double kSolarConstantWm2 = 1367.0;

// Time series of illumination-fraction frames, piecewise-constant in time:
// frame k holds on [t0 + k*frame_dt, t0 + (k+1)*frame_dt). Fractions are in
// [0, 1]; coverage is [t0, t0 + n_frames*frame_dt].
struct IlluminationSeries {
  int width = 0;
  int height = 0;
  double t0 = 0.0;        // s
  double frame_dt = 0.0;  // s
  int n_frames = 0;
  std::vector<float> fraction;  // frame-major, then row-major

  std::size_t idx(int frame, Cell c) const {
    return (static_cast<std::size_t>(frame) * height + c.y) * width + c.x;
  }
  double frame_fraction(int frame, Cell c) const { return fraction[idx(frame, c)]; }
  double coverage_end() const { return t0 + frame_dt * n_frames; }
  bool covers(double t_a, double t_b) const {
    return t_a >= t0 && t_b <= coverage_end();
  }
};

// Integral of 1367 * fraction(cell, t) over [t_a, t_b], in Wh/m^2.
// Summed directly over overlapped frames (each term nonnegative) so that
// adjacent intervals add up to ~1e-9 relative accuracy.
// Throws if [t_a, t_b] is outside coverage or t_a > t_b.
double irradiance_energy(Cell cell, double t_a, double t_b, const IlluminationSeries& illum);

}  // namespace roverplan
