#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

// Units used throughout the library: time in seconds, energy in Wh,
// distance in metres, power in W, irradiance energy in Wh/m^2.

namespace roverplan {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Cell {
  int x = 0;
  int y = 0;

  friend bool operator==(const Cell& a, const Cell& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
};

// Fixed direction order; ties in planners and policies are broken in this
// order, with Wait after the moves.
enum class Dir : std::uint8_t { N = 0, NE, E, SE, S, SW, W, NW };

inline constexpr int kNumDirs = 8;
inline constexpr int kDirDx[kNumDirs] = {0, 1, 1, 1, 0, -1, -1, -1};
inline constexpr int kDirDy[kNumDirs] = {-1, -1, 0, 1, 1, 1, 0, -1};

inline const char* dir_name(Dir d) {
  static const char* names[kNumDirs] = {"N", "NE", "E", "SE", "S", "SW", "W", "NW"};
  return names[static_cast<int>(d)];
}

inline bool dir_is_diagonal(Dir d) {
  int i = static_cast<int>(d);
  return kDirDx[i] != 0 && kDirDy[i] != 0;
}

inline Cell cell_step(Cell c, Dir d) {
  int i = static_cast<int>(d);
  return Cell{c.x + kDirDx[i], c.y + kDirDy[i]};
}

// Direction such that cell_step(from, d) == to; throws if not 8-adjacent.
Dir dir_between(Cell from, Cell to);

enum class ActionKind : std::uint8_t { Move = 0, Wait, Science };

struct Action {
  ActionKind kind = ActionKind::Wait;
  Dir dir = Dir::N;      // Move only
  int waypoint = 0;      // Science only, 1-based

  static Action move(Dir d) { return Action{ActionKind::Move, d, 0}; }
  static Action wait() { return Action{ActionKind::Wait, Dir::N, 0}; }
  static Action science(int wp) { return Action{ActionKind::Science, Dir::N, wp}; }

  friend bool operator==(const Action& a, const Action& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case ActionKind::Move: return a.dir == b.dir;
      case ActionKind::Wait: return true;
      case ActionKind::Science: return a.waypoint == b.waypoint;
    }
    return false;
  }
  friend bool operator!=(const Action& a, const Action& b) { return !(a == b); }
};

std::string action_name(const Action& a);

// next_wp is 1-based; n_waypoints+1 means all waypoints are done.
struct RoverState {
  Cell cell;
  double time = 0.0;    // s
  double energy = 0.0;  // Wh
  int next_wp = 1;
};

}  // namespace roverplan

namespace std {
template <>
struct hash<roverplan::Cell> {
  size_t operator()(const roverplan::Cell& c) const noexcept {
    return hash<long long>()((static_cast<long long>(c.x) << 32) ^ static_cast<unsigned>(c.y));
  }
};
}  // namespace std
