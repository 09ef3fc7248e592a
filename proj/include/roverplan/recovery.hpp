#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "roverplan/scenario.hpp"
#include "roverplan/types.hpp"

namespace roverplan {

// Conservative state lattice over (cell, time, energy). Time points are bin
// boundaries t_min + k*time_res capped at t_max; energy points are bin
// floors b_min + j*energy_res. Continuous states map to the corner with the
// latest time and lowest energy of their bin, so lattice values lower-bound
// continuous success probability.
struct StateLattice {
  int width = 0;
  int height = 0;
  double t_min = 0.0;
  double t_max = 0.0;
  double time_res = 0.0;
  int n_time = 0;    // time points (bin boundaries), k = 0..n_time-1
  double b_min = 0.0;
  double b_max = 0.0;
  double energy_res = 0.0;
  int n_energy = 0;  // energy points (bin floors), j = 0..n_energy-1

  static StateLattice for_scenario(const Scenario& s, double time_res, double energy_res);

  double time_at(int k) const {
    double t = t_min + time_res * k;
    return t < t_max ? t : t_max;
  }
  double energy_at(int j) const { return b_min + energy_res * j; }

  std::size_t n_cells() const { return static_cast<std::size_t>(width) * height; }
  std::size_t size() const { return n_cells() * n_time * n_energy; }
  std::size_t index(std::size_t cell_idx, int k, int j) const {
    return (cell_idx * n_time + k) * n_energy + j;
  }
};

struct LatticeRef {
  enum Kind : std::uint8_t { kPoint, kSafe, kFail };
  Kind kind = kFail;
  std::size_t index = 0;
};

// SAFE if is_safe(x); FAIL if x falls outside the lattice ranges or on a
// non-traversable cell; otherwise the conservative corner point
// (time rounded up, energy rounded down).
LatticeRef conservative_index(const RoverState& x, const StateLattice& lat, const Scenario& s);

// Action codes stored per lattice point.
inline constexpr std::int8_t kPolicyActionWait = 8;
inline constexpr std::int8_t kPolicyActionNone = 9;  // SAFE / FAIL / hopeless

struct RecoveryPolicy {
  StateLattice lat;
  std::uint64_t scenario_hash = 0;
  std::vector<float> value;        // success probability lower bound, [0,1]
  std::vector<std::int8_t> action; // 0..7 move dir, 8 wait, 9 none

  double value_at(LatticeRef ref) const {
    switch (ref.kind) {
      case LatticeRef::kSafe: return 1.0;
      case LatticeRef::kFail: return 0.0;
      default: return value[ref.index];
    }
  }
  // risk(x) = 1 - V_S(x).
  double risk(const RoverState& x, const Scenario& s) const;
  // Greedy recovery action; empty (halt) when the state is SAFE or FAIL.
  std::optional<Action> greedy(const RoverState& x, const Scenario& s) const;
};

struct RecoveryBuildOptions {
  int threads = 0;          // 0 -> hardware concurrency
  bool iterate = false;     // re-sweep until the max delta falls below tol
  double tol = 1e-5;
  int max_sweeps = 50;
};

struct RecoveryBuildStats {
  int sweeps = 0;
  double last_delta = 0.0;
};

// Backward dynamic program over the lattice. Time strictly increases along
// every transition, so one backward sweep over time layers is exact; the
// iterate option re-sweeps as a fixed-point safeguard. Throws if time_res
// exceeds the shortest action duration.
RecoveryPolicy build_recovery(const Scenario& s, const StateLattice& lat,
                              const RecoveryBuildOptions& opts = {},
                              RecoveryBuildStats* stats = nullptr);

// One additional sweep; returns the largest |delta V| it would apply.
// After build_recovery the result is always 0 for acyclic lattices.
double resweep_max_delta(const RecoveryPolicy& pol, const Scenario& s, int threads = 0);

void save_policy(const RecoveryPolicy& pol, const std::string& path);
RecoveryPolicy load_policy(const std::string& path);

}  // namespace roverplan
