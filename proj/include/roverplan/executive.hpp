#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "roverplan/fault.hpp"
#include "roverplan/recovery.hpp"
#include "roverplan/treeplan.hpp"

namespace roverplan {

enum class TrialStatus : std::uint8_t {
  SafeSuccess = 0,     // reached the safe set
  OperationalExit,     // left the operational region
  Stranded,            // recovery risk hit 1 with no safe option
  Infeasible,          // no plan from the start state at the given beta
};

const char* trial_status_name(TrialStatus st);
bool trial_failed(TrialStatus st);  // everything except SafeSuccess

struct TrialStep {
  RoverState state;   // state the action was taken from
  Action action;
  OutcomeLabel outcome = OutcomeLabel::Nominal;
  double duration_s = 0.0;
  double reward = 0.0;
};

struct TrialRecord {
  std::uint64_t rng_seed = 0;
  TrialStatus status = TrialStatus::Infeasible;
  std::vector<TrialStep> steps;
  RoverState final_state;
  int waypoints_visited = 0;
  int fault_count = 0;
  int replan_count = 0;
  double total_reward = 0.0;
};

struct ExecConfig {
  double zeta = -0.001;     // per-action reward for non-science actions
  bool record_steps = true;
};

// One mission under sampled outcomes: follow the partial policy tree,
// re-plan on fault-branch landings, fall back to the recovery policy when no
// plan exists. Synchronization idles (waiting in place until the tree's next
// departure time) are recorded as Wait steps.
TrialRecord run_online(const RoverState& x0, const Scenario& s, const RecoveryPolicy& pol,
                       MissionPlanner& planner, RngStream& rng, const ExecConfig& cfg = {});

struct TrialSummary {
  std::uint64_t rng_seed = 0;
  TrialStatus status = TrialStatus::Infeasible;
  int waypoints_visited = 0;
  int fault_count = 0;
  int replan_count = 0;
  int n_steps = 0;
  double total_reward = 0.0;
  double final_time = 0.0;
  double final_energy = 0.0;
};

struct CampaignStats {
  std::uint64_t base_seed = 0;
  double beta = 0.0;
  std::size_t n_trials = 0;
  double mean_reward = 0.0;
  double failure_rate = 0.0;
  double failure_ci99_halfwidth = 0.0;  // normal approx on the observed rate
  std::map<int, std::size_t> reward_histogram;  // reward rounded to nearest integer
  std::map<std::string, std::size_t> status_counts;
  std::vector<TrialSummary> trials;  // trial index order
};

// n_trials independent missions with per-trial seeds derived from base_seed;
// aggregation is in trial-index order so results are identical for any
// thread count.
CampaignStats run_campaign(std::size_t n_trials, std::uint64_t base_seed, const RoverState& x0,
                           const Scenario& s, const RecoveryPolicy& pol, MissionPlanner& planner,
                           int threads = 0, const ExecConfig& cfg = {});

// Artifacts. Wall-clock timings are deliberately not serialized.
void write_campaign_report_json(const CampaignStats& stats, const Scenario& s,
                                const std::string& path);
void write_trial_trace_csv(const TrialRecord& rec, const std::string& path);

}  // namespace roverplan
