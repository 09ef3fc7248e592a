#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "roverplan/fault.hpp"
#include "roverplan/recovery.hpp"
#include "roverplan/scenario.hpp"

namespace roverplan {

struct PlannerConfig {
  double beta = 0.05;              // mission risk bound
  double time_class_res = 1800.0;  // resolution-pruning time class width, s
  double energy_class_res = 150.0; // resolution-pruning energy class width, Wh
  int max_iterations = 15000;      // expansion cap per search (one waypoint-count attempt)
};

// Backward search node. b_req is the minimal battery at (cell, t) from which
// the suffix chain reaches a safe terminal; er is the execution risk of the
// suffix. succ links toward the terminal.
struct SearchNode {
  Cell cell;
  double t = 0.0;
  double b_req = 0.0;
  double er = 0.0;   // execution risk of the chain from here
  int next_wp = 1;
  int segment = 1;
  std::optional<Action> action;  // action leading to succ; empty at terminals
  std::shared_ptr<const SearchNode> succ;
  double t_term = 0.0;  // terminal (safe-arrival) time of this chain
  std::uint64_t seq = 0;  // insertion order, breaks exact ties
};

using NodePtr = std::shared_ptr<const SearchNode>;

struct StartGate {
  RoverState x0;
};
struct WaypointGate {
  int wp = 1;  // 1-based waypoint whose completion this segment ends at
  Cell cell;
};
using Gate = std::variant<StartGate, WaypointGate>;

struct SegmentResult {
  std::vector<NodePtr> hits;
  std::size_t expansions = 0;
  bool cap_hit = false;
};

// Fault branch recorded on a tree node, with the recovery risk at the branch
// state evaluated at the node's minimal energy requirement.
struct FaultBranch {
  OutcomeLabel label = OutcomeLabel::FaultH1;
  double prob = 0.0;
  RoverState state;
  double risk = 0.0;
};

struct TreeNode {
  Cell cell;
  double depart_time = 0.0;
  double min_energy_req = 0.0;
  double exec_risk = 0.0;
  int segment = 1;
  int next_wp = 1;
  std::optional<Action> action;  // empty at the safe terminal
  std::vector<FaultBranch> branches;
};

struct PartialPolicyTree {
  std::vector<TreeNode> nodes;   // root first, safe terminal last
  double root_exec_risk = 0.0;
  int waypoints_planned = 0;     // prefix length m of the waypoint list
  int waypoints_total = 0;
  double traverse_time_s = 0.0;  // terminal time minus start-state time
  double beta = 0.0;
  std::uint64_t scenario_hash = 0;

  bool truncated() const { return waypoints_planned < waypoints_total; }
};

// Execution risk of taking `a` from x (battery at the minimal requirement)
// when the nominal successor's chain risk is succ_er:
//   er = p_h1*risk(f1) + p_h2*risk(f2) + p_nom*succ_er   for moves,
//   er = succ_er                                          for static actions.
double node_execution_risk(const RoverState& x, const Action& a, double succ_er,
                           const Scenario& s, const RecoveryPolicy& pol);

// Keeps one node per (cell, time class, energy class, segment): lowest
// b_req, then lowest er, then earliest position. Input order is preserved
// for survivors.
std::vector<NodePtr> resolution_prune(const std::vector<NodePtr>& nodes, double time_class_res,
                                      double energy_class_res, double t_min, double b_min);

// Predecessors of n: Wait and Move within the same segment, plus the Science
// inversion of waypoint next_wp-1 when n sits in that waypoint's region (the
// crossing into the previous segment). Battery requirements are inverted
// through the nominal dynamics and clamped at b_min; candidates needing more
// than b_max, starting before t_floor, or whose execution risk exceeds beta
// are dropped. Science inversions below waypoint index wp_floor are
// suppressed (they can never reach the gate of the running search).
std::vector<SearchNode> backward_expand(const SearchNode& n, const Scenario& s,
                                        const RecoveryPolicy& pol, const PlannerConfig& cfg,
                                        double t_floor, int wp_floor = 1);

class MissionPlanner {
 public:
  MissionPlanner(const Scenario& s, const RecoveryPolicy& pol, PlannerConfig cfg);

  // Risk-bounded backward tree search through the remaining waypoints,
  // shortening the list from the back until a plan exists. Returns nullopt
  // when risk(x0) > beta or no prefix (including the empty one) connects.
  std::optional<PartialPolicyTree> plan(const RoverState& x0);

  // Memoized variant keyed on the exact bits of x0; safe to call from
  // multiple threads. Campaign re-planning hits the same states repeatedly.
  std::optional<PartialPolicyTree> plan_cached(const RoverState& x0);

  // Exposed for tests.
  std::vector<NodePtr> safe_terminals(int next_wp) const;
  SegmentResult search_segment(const std::vector<NodePtr>& goals, const Gate& gate,
                               int segment) const;

  const PlannerConfig& config() const { return cfg_; }
  std::size_t cache_size() const;

 private:
  std::optional<PartialPolicyTree> assemble(const NodePtr& hit, const RoverState& x0,
                                            int prefix) const;

  const Scenario& s_;
  const RecoveryPolicy& pol_;
  PlannerConfig cfg_;

  mutable std::mutex mu_;
  std::vector<NodePtr> terminals_;  // next_wp stamped at seeding time
  std::map<std::array<std::uint64_t, 4>, std::shared_ptr<const std::optional<PartialPolicyTree>>>
      plan_memo_;
};

// Plan artifact writers.
void write_plan_json(const PartialPolicyTree& tree, const Scenario& s, const std::string& path);
void write_plan_profiles_csv(const PartialPolicyTree& tree, const std::string& energy_csv_path,
                             const std::string& risk_csv_path);

}  // namespace roverplan
