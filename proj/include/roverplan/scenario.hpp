#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "roverplan/illumination.hpp"
#include "roverplan/terrain.hpp"
#include "roverplan/types.hpp"

namespace roverplan {

struct Waypoint {
  Cell cell;
  double duration_s = 0.0;
  double energy_wh = 0.0;   // net draw of the science activity
  bool has_window = false;
  double t_open = 0.0;      // activity must fit inside [t_open, t_close]
  double t_close = 0.0;
};

struct Haven {
  Cell cell;
  double deadline_s = 0.0;       // latest arrival/holding time t_bar
  double min_energy_wh = 0.0;    // required battery at the deadline b_bar
};

struct RoverParams {
  double panel_area_m2 = 0.0;
  double panel_efficiency = 0.0;  // [0,1]
  double velocity_mps = 0.0;
  double power_drive_w = 0.0;
  double power_fault_w = 0.0;
  double power_wait_w = 0.0;
  double power_hibernate_w = 0.0;
  double battery_capacity_wh = 0.0;
  double wait_duration_s = 0.0;
};

struct FaultParams {
  double rate_per_m = 0.0;        // Poisson fault rate alpha
  double recovery_duration_s = 0.0;  // delta-t spent in fault recovery
};

struct OperationalRegion {
  double t_min = 0.0;
  double t_max = 0.0;
  double b_min = 0.0;
  double b_max = 0.0;
};

struct Scenario {
  std::string name;
  TerrainGrid terrain;
  IlluminationSeries illum;
  std::vector<Waypoint> waypoints;
  std::vector<Haven> havens;
  OperationalRegion op;
  RoverParams rover;
  FaultParams fault;
  RoverState start;

  // Derived in finalize().
  std::unordered_map<std::size_t, int> haven_by_cell;

  int n_waypoints() const { return static_cast<int>(waypoints.size()); }
  const Haven* haven_at(Cell c) const {
    if (!terrain.in_bounds(c)) return nullptr;
    auto it = haven_by_cell.find(terrain.idx(c));
    return it == haven_by_cell.end() ? nullptr : &havens[it->second];
  }

  // Builds lookup tables and checks every scenario invariant; throws
  // ValidationError with a specific message on the first violation.
  void finalize();

  // FNV-1a over the logical content (not file bytes); embedded in policy and
  // plan artifacts to detect mismatched inputs.
  std::uint64_t hash() const;
};

// Manifest + raster loading. Raster paths in the manifest are resolved
// relative to the manifest's directory. Calls finalize().
Scenario load_scenario(const std::string& manifest_path);

// Writes manifest.json plus elevation/illumination rasters into out_dir.
void save_scenario(const Scenario& s, const std::string& out_dir);

}  // namespace roverplan
