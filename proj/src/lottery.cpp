#include "evor/lottery.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace evor {

namespace {

constexpr double kProbSumTolerance = 1e-12;

void check_prob_sum(double sum) {
  if (std::abs(sum - 1.0) > kProbSumTolerance) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(sum) +
                                ", expected 1 within 1e-12");
  }
}

}  // namespace

Lottery::Lottery(std::vector<Outcome> outcomes) {
  double sum = 0.0;
  for (const auto& o : outcomes) {
    if (!(o.payoff >= 0.0) || !std::isfinite(o.payoff)) {
      throw std::invalid_argument("lottery payoff must be a finite non-negative real");
    }
    if (!std::isfinite(o.prob) || o.prob < 0.0 || o.prob > 1.0) {
      throw std::invalid_argument("lottery probability must lie in [0,1]");
    }
    sum += o.prob;
  }
  check_prob_sum(sum);
  outcomes_.reserve(outcomes.size());
  for (const auto& o : outcomes) {
    if (o.prob > 0.0) outcomes_.push_back(o);  // strip zero-probability entries
  }
  if (outcomes_.empty()) {
    throw std::invalid_argument("lottery needs at least one outcome with positive probability");
  }
}

Lottery Lottery::sure(double payoff) { return Lottery({{payoff, 1.0}}); }

FitnessParams::FitnessParams(double endowment_, double attention_)
    : endowment(endowment_), attention(attention_) {
  if (!(endowment > 0.0) || !std::isfinite(endowment)) {
    throw std::invalid_argument("endowment W must be a positive finite real");
  }
  if (!(attention > 0.0) || !(attention < 1.0)) {
    throw std::invalid_argument("attention w must lie strictly inside (0,1)");
  }
}

JointLottery::JointLottery(std::vector<JointOutcome> outcomes) {
  double sum = 0.0;
  for (const auto& o : outcomes) {
    if (!(o.payoff_a >= 0.0) || !(o.payoff_b >= 0.0) ||
        !std::isfinite(o.payoff_a) || !std::isfinite(o.payoff_b)) {
      throw std::invalid_argument("joint payoffs must be finite non-negative reals");
    }
    if (!std::isfinite(o.prob) || o.prob < 0.0 || o.prob > 1.0) {
      throw std::invalid_argument("joint probability must lie in [0,1]");
    }
    sum += o.prob;
  }
  check_prob_sum(sum);
  outcomes_.reserve(outcomes.size());
  for (const auto& o : outcomes) {
    if (o.prob > 0.0) outcomes_.push_back(o);
  }
  if (outcomes_.empty()) {
    throw std::invalid_argument("joint lottery needs at least one outcome with positive probability");
  }
}

Lottery JointLottery::marginal_a() const {
  std::vector<Outcome> out;
  out.reserve(outcomes_.size());
  for (const auto& o : outcomes_) out.push_back({o.payoff_a, o.prob});
  return Lottery(std::move(out));
}

Lottery JointLottery::marginal_b() const {
  std::vector<Outcome> out;
  out.reserve(outcomes_.size());
  for (const auto& o : outcomes_) out.push_back({o.payoff_b, o.prob});
  return Lottery(std::move(out));
}

double mean(const Lottery& lot) {
  double m = 0.0;
  for (const auto& o : lot.outcomes()) m += o.prob * o.payoff;
  return m;
}

double variance(const Lottery& lot) {
  const double m = mean(lot);
  double v = 0.0;
  for (const auto& o : lot.outcomes()) {
    const double d = o.payoff - m;
    v += o.prob * d * d;
  }
  return v;
}

double fitness(double payoff, const FitnessParams& params) {
  return params.endowment * (1.0 - params.attention) + params.attention * payoff;
}

double log_fitness_mean(const Lottery& lot, const FitnessParams& params) {
  double s = 0.0;
  for (const auto& o : lot.outcomes()) s += o.prob * std::log(fitness(o.payoff, params));
  return s;
}

double taylor_log_fitness_mean(const Lottery& lot, const FitnessParams& params) {
  const double pi_bar = fitness(mean(lot), params);
  const double w = params.attention;
  return std::log(pi_bar) - w * w * variance(lot) / (2.0 * pi_bar * pi_bar);
}

double payoff_geometric_mean(const Lottery& lot) {
  for (const auto& o : lot.outcomes()) {
    if (o.payoff == 0.0) return 0.0;
  }
  double s = 0.0;
  for (const auto& o : lot.outcomes()) s += o.prob * std::log(o.payoff);
  return std::exp(s);
}

}  // namespace evor
