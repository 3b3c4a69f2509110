#ifndef EVOR_LOTTERY_HPP
#define EVOR_LOTTERY_HPP

#include <vector>

namespace evor {

struct Outcome {
  double payoff;  // non-negative
  double prob;    // in (0,1]
  bool operator==(const Outcome&) const = default;
};

// Discrete lottery: finite support over non-negative payoffs.
// Zero-probability entries are stripped at construction; probabilities
// must sum to 1 within 1e-12.
class Lottery {
 public:
  explicit Lottery(std::vector<Outcome> outcomes);
  static Lottery sure(double payoff);

  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  bool operator==(const Lottery&) const = default;

 private:
  std::vector<Outcome> outcomes_;
};

// Endowment W > 0 and attention degree (selection intensity) w in (0,1).
struct FitnessParams {
  double endowment;
  double attention;
  FitnessParams(double endowment_, double attention_);
};

struct JointOutcome {
  double payoff_a;
  double payoff_b;
  double prob;
  bool operator==(const JointOutcome&) const = default;
};

// Joint distribution of the two reward draws; supports correlated rewards
// in the simulator. Classification only ever uses the marginals.
class JointLottery {
 public:
  explicit JointLottery(std::vector<JointOutcome> outcomes);

  const std::vector<JointOutcome>& outcomes() const { return outcomes_; }
  Lottery marginal_a() const;
  Lottery marginal_b() const;

 private:
  std::vector<JointOutcome> outcomes_;
};

double mean(const Lottery& lot);
double variance(const Lottery& lot);

// pi = W(1-w) + w * payoff; strictly positive for valid params and payoff >= 0.
double fitness(double payoff, const FitnessParams& params);

// <log pi> = sum_i p_i log(W(1-w) + w a_i)
double log_fitness_mean(const Lottery& lot, const FitnessParams& params);

// Small-variance approximation:
//   log(W(1-w) + w*mean) - w^2 var / (2 (W(1-w) + w*mean)^2)
double taylor_log_fitness_mean(const Lottery& lot, const FitnessParams& params);

// prod_i a_i^{p_i}; 0 whenever any outcome has payoff 0.
double payoff_geometric_mean(const Lottery& lot);

}  // namespace evor

#endif
