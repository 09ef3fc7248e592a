#pragma once

#include <vector>

#include "roverplan/dynamics.hpp"
#include "roverplan/rng.hpp"
#include "roverplan/scenario.hpp"
#include "roverplan/types.hpp"

namespace roverplan {

enum class OutcomeLabel : std::uint8_t { Nominal = 0, FaultH1, FaultH2 };

const char* outcome_name(OutcomeLabel l);

// Poisson(rate alpha per metre) fault split over a drive of length rho:
//   p_nom = exp(-alpha*rho)
//   p_h1  = 1 - exp(-alpha*rho/2)   (fault in the first half)
//   p_h2  = exp(-alpha*rho/2) - exp(-alpha*rho)
struct FaultProbs {
  double p_nom = 1.0;
  double p_h1 = 0.0;
  double p_h2 = 0.0;
};

FaultProbs fault_probabilities(double rho_m, double alpha_per_m);

struct Outcome {
  OutcomeLabel label = OutcomeLabel::Nominal;
  double prob = 1.0;
  RoverState state;
};

// All stochastic successors of (x, a) with their probabilities, in order
// [Nominal, FaultH1, FaultH2]. Static actions have the single Nominal
// outcome. FaultH1 returns to the origin cell at t + recovery_duration;
// FaultH2 completes the drive nominally and then spends recovery_duration at
// the destination. Fault segments draw power_fault and collect the solar
// gain of the cell where the rover sits.
std::vector<Outcome> enumerate_outcomes(const RoverState& x, const Action& a, const Scenario& s);

// Inverse-CDF sample in the fixed order [FaultH1, FaultH2, Nominal]:
// u < p_h1 -> FaultH1; u < p_h1 + p_h2 -> FaultH2; else Nominal.
Outcome sample_outcome(const RoverState& x, const Action& a, const Scenario& s, RngStream& rng);

}  // namespace roverplan
