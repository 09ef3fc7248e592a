#pragma once

#include <cstddef>

#include "roverplan/recovery.hpp"
#include "roverplan/scenario.hpp"
#include "roverplan/treeplan.hpp"

namespace roverplan {

// Guards for the exhaustive computations below: grid of at most 16 cells,
// at most 8 time and 8 energy points, at most 2 waypoints. Throws
// ValidationError otherwise.
void validate_micro(const Scenario& s, const StateLattice& lat);

// Exact execution risk of a policy tree's root by closed-form expansion:
//   sum_k (prod_{j<k} p_nom_j) * (p_h1_k * R(f1_k) + p_h2_k * R(f2_k))
// over the chain's moves, with branch risks from the recovery policy at the
// node's minimal energy requirement. Matches the planner's recursion
// algebraically; used to cross-check its bookkeeping.
double exact_tree_risk(const PartialPolicyTree& tree, const Scenario& s,
                       const RecoveryPolicy& pol);

struct CcOptimum {
  bool feasible = false;
  double expected_waypoints = 0.0;
  double failure_prob = 0.0;
  // Same two numbers recomputed by enumerating the extracted policy's full
  // outcome tree; agreement validates the optimization.
  double verified_waypoints = 0.0;
  double verified_failure_prob = 0.0;
};

// Chance-constrained optimum over the conservative lattice model by exact
// Pareto-frontier dynamic programming: per lattice state (cell, time,
// energy, next_wp) the frontier of achievable (expected waypoints, failure
// probability) pairs over history-dependent deterministic policies, combined
// across fault outcomes, dominated points discarded. Scores waypoint visits
// only; the executive's per-step shaping penalty is excluded, which keeps
// the frontier finite (policies with equal science patterns collapse to one
// point). The start state is mapped through conservative_index, so
// comparisons with the tree planner are like-for-like. Throws if the
// instance exceeds micro bounds.
CcOptimum exhaustive_cc_optimum(const Scenario& s, const StateLattice& lat, double beta,
                                std::size_t max_frontier = 200000);

}  // namespace roverplan
