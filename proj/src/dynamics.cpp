#include "evor/dynamics.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "evor/er_core.hpp"

namespace evor {

namespace {

// Seed split: replicate r runs on mt19937_64 seeded with
// splitmix64(config.seed + r). Pinned so golden outputs stay stable.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 replicate_rng(std::uint64_t seed, std::uint64_t replicate) {
  return std::mt19937_64(splitmix64(seed + replicate));
}

// 53-bit uniform in [0,1); avoids distribution objects so the draw sequence
// is identical across standard library implementations.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double sample(const Lottery& lot, std::mt19937_64& rng) {
  const double u = next_unit(rng);
  double acc = 0.0;
  for (const auto& o : lot.outcomes()) {
    acc += o.prob;
    if (u < acc) return o.payoff;
  }
  return lot.outcomes().back().payoff;
}

const JointOutcome& sample(const JointLottery& joint, std::mt19937_64& rng) {
  const double u = next_unit(rng);
  double acc = 0.0;
  for (const auto& o : joint.outcomes()) {
    acc += o.prob;
    if (u < acc) return o;
  }
  return joint.outcomes().back();
}

struct RunResult {
  Trajectory trajectory;      // filled only when recording
  double log_odds_sum = 0.0;  // sum of per-step log fitness ratios
  long steps = 0;
  std::optional<AbsorbedState> absorbed_state;
};

// One replicate of the recurrence; the reward draw is parameterized so the
// independent and joint cases share the loop.
template <typename DrawRewards>
RunResult run_replicate(DrawRewards&& draw, const FitnessParams& params,
                        const SimConfig& config, std::uint64_t replicate,
                        bool record) {
  auto rng = replicate_rng(config.seed, replicate);
  RunResult res;
  double x = config.initial_frequency;
  if (record) {
    res.trajectory.frequencies.push_back(x);
    res.trajectory.rewards.reserve(64);
  }
  for (long t = 0; t < config.max_generations; ++t) {
    const auto [a, b] = draw(rng);
    x = step_frequency(x, a, b, params);
    res.log_odds_sum += std::log(fitness(a, params) / fitness(b, params));
    ++res.steps;
    if (record) {
      res.trajectory.frequencies.push_back(x);
      res.trajectory.rewards.emplace_back(a, b);
    }
    if (x <= config.fixation_epsilon) {
      res.absorbed_state = AbsorbedState::NearZero;
      break;
    }
    if (x >= 1.0 - config.fixation_epsilon) {
      res.absorbed_state = AbsorbedState::NearOne;
      break;
    }
  }
  if (record) {
    res.trajectory.absorbed_state = res.absorbed_state;
    if (res.absorbed_state) res.trajectory.absorbed_at = res.steps;
  }
  return res;
}

template <typename DrawRewards>
FixationReport run_fixation(DrawRewards&& draw, double analytic_gap,
                            const FitnessParams& params, const SimConfig& config) {
  config.validate();
  FixationReport report;
  report.config = config;
  report.replicates = config.replicates;
  report.growth_gap = analytic_gap;
  if (analytic_gap > kDefaultTieTolerance) report.predicted_state = PredictedState::NearOne;
  else if (analytic_gap < -kDefaultTieTolerance) report.predicted_state = PredictedState::NearZero;
  else report.predicted_state = PredictedState::Neutral;

  long near_one = 0, near_zero = 0;
  double rate_sum = 0.0;
  for (long r = 0; r < config.replicates; ++r) {
    const RunResult res = run_replicate(draw, params, config,
                                        static_cast<std::uint64_t>(r), false);
    if (res.absorbed_state == AbsorbedState::NearOne) ++near_one;
    else if (res.absorbed_state == AbsorbedState::NearZero) ++near_zero;
    rate_sum += res.log_odds_sum / static_cast<double>(res.steps);
  }
  const double n = static_cast<double>(config.replicates);
  report.fraction_near_one = near_one / n;
  report.fraction_near_zero = near_zero / n;
  report.fraction_unabsorbed = (config.replicates - near_one - near_zero) / n;
  report.mean_growth_rate = rate_sum / n;
  return report;
}

}  // namespace

void SimConfig::validate() const {
  if (max_generations < 1) throw std::invalid_argument("max_generations must be >= 1");
  if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
  if (!(fixation_epsilon > 0.0) || !(fixation_epsilon < 0.5)) {
    throw std::invalid_argument("fixation_epsilon must lie in (0, 0.5)");
  }
  if (!(initial_frequency > 0.0) || !(initial_frequency < 1.0)) {
    throw std::invalid_argument("initial_frequency must lie in (0,1)");
  }
}

double step_frequency(double x, double a, double b, const FitnessParams& params) {
  if (x == 0.0 || x == 1.0) return x;
  const double pa = fitness(a, params);
  const double pb = fitness(b, params);
  return x * pa / (x * pa + (1.0 - x) * pb);
}

double step_delta(double x, double a, double b, const FitnessParams& params) {
  if (x == 0.0 || x == 1.0) return 0.0;
  const double pa = fitness(a, params);
  const double pb = fitness(b, params);
  return x * (1.0 - x) * (pa - pb) / (x * pa + (1.0 - x) * pb);
}

double step_odds(double u, double a, double b, const FitnessParams& params) {
  return u * fitness(a, params) / fitness(b, params);
}

Trajectory simulate_trajectory(const Lottery& lot_a, const Lottery& lot_b,
                               const FitnessParams& params, const SimConfig& config) {
  config.validate();
  auto draw = [&](std::mt19937_64& rng) {
    const double a = sample(lot_a, rng);  // a drawn before b, by convention
    const double b = sample(lot_b, rng);
    return std::pair{a, b};
  };
  return run_replicate(draw, params, config, 0, true).trajectory;
}

Trajectory simulate_trajectory(const JointLottery& joint,
                               const FitnessParams& params, const SimConfig& config) {
  config.validate();
  auto draw = [&](std::mt19937_64& rng) {
    const auto& o = sample(joint, rng);
    return std::pair{o.payoff_a, o.payoff_b};
  };
  return run_replicate(draw, params, config, 0, true).trajectory;
}

double estimate_growth_rate(const Lottery& lot_a, const Lottery& lot_b,
                            const FitnessParams& params, const SimConfig& config) {
  config.validate();
  auto rng = replicate_rng(config.seed, 0);
  double sum = 0.0;
  for (long t = 0; t < config.max_generations; ++t) {
    const double a = sample(lot_a, rng);
    const double b = sample(lot_b, rng);
    sum += std::log(fitness(a, params) / fitness(b, params));
  }
  return sum / static_cast<double>(config.max_generations);
}

double log_ratio_step_sd(const Lottery& lot_a, const Lottery& lot_b,
                         const FitnessParams& params) {
  double m = 0.0, m2 = 0.0;
  for (const auto& oa : lot_a.outcomes()) {
    for (const auto& ob : lot_b.outcomes()) {
      const double v = std::log(fitness(oa.payoff, params) / fitness(ob.payoff, params));
      const double p = oa.prob * ob.prob;
      m += p * v;
      m2 += p * v * v;
    }
  }
  const double var = m2 - m * m;
  return var > 0.0 ? std::sqrt(var) : 0.0;
}

FixationReport estimate_fixation(const Lottery& lot_a, const Lottery& lot_b,
                                 const FitnessParams& params, const SimConfig& config) {
  auto draw = [&](std::mt19937_64& rng) {
    const double a = sample(lot_a, rng);
    const double b = sample(lot_b, rng);
    return std::pair{a, b};
  };
  return run_fixation(draw, growth_gap(lot_a, lot_b, params), params, config);
}

FixationReport estimate_fixation(const JointLottery& joint,
                                 const FitnessParams& params, const SimConfig& config) {
  auto draw = [&](std::mt19937_64& rng) {
    const auto& o = sample(joint, rng);
    return std::pair{o.payoff_a, o.payoff_b};
  };
  // the analytic gap depends on the marginals only
  return run_fixation(draw, growth_gap(joint.marginal_a(), joint.marginal_b(), params),
                      params, config);
}

}  // namespace evor
