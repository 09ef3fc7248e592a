#pragma once

#include <vector>

#include "roverplan/scenario.hpp"
#include "roverplan/types.hpp"

namespace roverplan {

// Battery trace of holding position under a constant draw from t_a to t_b:
// integrates panel gain minus draw frame-by-frame, clamping above at
// capacity; floor_wh is the running minimum along the way.
struct EnergyTrace {
  double final_wh = 0.0;
  double floor_wh = 0.0;
};

EnergyTrace integrate_hold(Cell cell, double t_a, double t_b, double b_start,
                           double draw_w, const Scenario& s);

// Panel energy gained while stationed at cell over [t_a, t_b], in Wh.
double solar_gain(Cell cell, double t_a, double t_b, const Scenario& s);

// Same, with the interval clipped to illumination coverage; time beyond the
// series contributes no gain. Transitions that overrun t_max (late faults,
// the final step of a trial) stay computable this way; such states fail
// in_operational regardless.
double solar_gain_clipped(Cell cell, double t_a, double t_b, const Scenario& s);

double move_duration(Cell from, Cell to, const Scenario& s);

// True iff x is inside the operational region O: traversable cell,
// t in [t_min, t_max], b in [b_min, b_max].
bool in_operational(const RoverState& x, const Scenario& s);

// Actions legal at x, in canonical order: moves N..NW onto traversable
// cells, then Wait, then Science(next_wp) when the rover sits on that
// waypoint's cell (and inside its time window, if any).
std::vector<Action> available_actions(const RoverState& x, const Scenario& s);

// Deterministic fault-free successor. Moves split panel gain between the two
// cells at the midpoint time; all transitions clamp energy at capacity once,
// at the end. Throws on illegal actions.
RoverState nominal_transition(const RoverState& x, const Action& a, const Scenario& s);

// Hibernation at a haven from arrival (t_arr, b_arr) until the haven
// deadline under the hibernation draw. Throws if h is not a haven cell or
// t_arr is past the deadline.
EnergyTrace hibernation_outcome(Cell h, double t_arr, double b_arr, const Scenario& s);

// Membership in the safe set S: at a haven, not past its deadline, and
// hibernation until the deadline keeps the battery at or above b_min
// throughout and ends at or above the haven's minimum energy.
bool is_safe(const RoverState& x, const Scenario& s);

// Shortest strictly positive action duration over the scenario (used to
// validate lattice resolutions).
double shortest_action_duration(const Scenario& s);

}  // namespace roverplan
