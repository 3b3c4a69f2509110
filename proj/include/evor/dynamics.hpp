#ifndef EVOR_DYNAMICS_HPP
#define EVOR_DYNAMICS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "evor/lottery.hpp"

namespace evor {

struct SimConfig {
  std::uint64_t seed = 0;
  long max_generations = 100000;
  double fixation_epsilon = 1e-6;  // in (0, 0.5)
  long replicates = 1;
  double initial_frequency = 0.5;  // in (0,1)

  void validate() const;
};

enum class AbsorbedState { NearZero, NearOne };

struct Trajectory {
  std::vector<double> frequencies;               // x_0 .. x_T
  std::vector<std::pair<double, double>> rewards;  // (a_t, b_t) per step taken
  std::optional<long> absorbed_at;
  std::optional<AbsorbedState> absorbed_state;
};

enum class PredictedState { NearOne, NearZero, Neutral };

struct FixationReport {
  long replicates = 0;
  double fraction_near_one = 0.0;
  double fraction_near_zero = 0.0;
  double fraction_unabsorbed = 0.0;
  PredictedState predicted_state = PredictedState::Neutral;
  double mean_growth_rate = 0.0;  // empirical, averaged over replicates
  double growth_gap = 0.0;        // analytic <log pi_A> - <log pi_B>
  SimConfig config;
};

// One step of the frequency recurrence
//   x' = x pi_A / (x pi_A + (1-x) pi_B),  pi = W(1-w) + w * reward.
// x in {0,1} is absorbing and returned unchanged.
double step_frequency(double x, double a, double b, const FitnessParams& params);

// Increment form: x' - x = x(1-x)(pi_A - pi_B) / (x pi_A + (1-x) pi_B).
double step_delta(double x, double a, double b, const FitnessParams& params);

// Odds form, u = x/(1-x):  u' = u * pi_A / pi_B.
double step_odds(double u, double a, double b, const FitnessParams& params);

// Iterates the recurrence with i.i.d. reward draws, one (a_t, b_t) pair per
// generation shared by the whole population. Stops once x leaves
// [eps, 1-eps] or at max_generations. Deterministic given config.seed.
Trajectory simulate_trajectory(const Lottery& lot_a, const Lottery& lot_b,
                               const FitnessParams& params, const SimConfig& config);

// Correlated rewards: one joint draw per generation.
Trajectory simulate_trajectory(const JointLottery& joint,
                               const FitnessParams& params, const SimConfig& config);

// Runs the odds recurrence without absorption for max_generations steps and
// returns (log u_n - log u_0) / n; converges to growth_gap by the SLLN.
double estimate_growth_rate(const Lottery& lot_a, const Lottery& lot_b,
                            const FitnessParams& params, const SimConfig& config);

// Exact standard deviation of the per-step log fitness ratio for independent
// draws; gives the SLLN error scale sigma/sqrt(n).
double log_ratio_step_sd(const Lottery& lot_a, const Lottery& lot_b,
                         const FitnessParams& params);

FixationReport estimate_fixation(const Lottery& lot_a, const Lottery& lot_b,
                                 const FitnessParams& params, const SimConfig& config);

FixationReport estimate_fixation(const JointLottery& joint,
                                 const FitnessParams& params, const SimConfig& config);

}  // namespace evor

#endif
