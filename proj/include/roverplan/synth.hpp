#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roverplan/scenario.hpp"

namespace roverplan {

// Deterministic synthetic world: a parabolic crater bowl in otherwise flat
// terrain, illuminated by a low sun circling in azimuth. Horizon angles are
// ray-cast per cell per frame; the crater floor stays permanently shadowed
// when the rim subtends more than the sun's elevation.
struct SynthSpec {
  std::string name = "synthetic";
  int width = 32;
  int height = 32;
  double resolution_m = 240.0;
  double slope_limit_deg = 20.0;

  bool crater = true;
  double crater_cx = 16.0;  // cell coordinates of the crater centre
  double crater_cy = 16.0;
  double crater_radius_m = 1900.0;
  double crater_depth_m = 260.0;
  double rim_height_m = 0.0;  // triangular uplift centred on the crater circle
  double rim_width_m = 720.0;

  double noise_amp_m = 0.0;  // seeded per-cell elevation jitter

  // (cell, elevation) pairs applied after the base surface; used to carve
  // deterministic features such as non-traversable moats.
  std::vector<std::pair<Cell, double>> elevation_overrides;

  double sun_elev_deg = 5.0;
  double sun_az0_deg = 0.0;
  double sun_period_s = 172800.0;
  double sun_disk_deg = 0.53;

  double illum_t0 = 0.0;
  double illum_frame_dt = 3600.0;
  int illum_n_frames = 82;

  OperationalRegion op;
  RoverParams rover;
  FaultParams fault;
  std::vector<Waypoint> waypoints;
  std::vector<Haven> havens;
  RoverState start;
};

// Builds and finalizes the scenario; identical (spec, seed) pairs produce
// identical scenarios.
Scenario generate_synthetic(const SynthSpec& spec, std::uint64_t seed);

// Shipped presets.
SynthSpec medium_preset();      // 32x32 crater world, 82 h mission, 4 waypoints
SynthSpec micro_preset();       // 4x4 lit corner of the medium world, 1 waypoint
SynthSpec drop_preset();        // flat world whose last waypoint sits on an
                                // unreachable traversable island
std::vector<std::string> preset_names();
SynthSpec preset_by_name(const std::string& name);  // throws on unknown name

}  // namespace roverplan
