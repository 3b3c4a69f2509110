#include "evor/allais.hpp"

#include <cmath>
#include <stdexcept>

namespace evor {

namespace {

constexpr double kMillion100 = 100e6;
constexpr double kMillion500 = 500e6;

// Scenario-1 inequalities written out directly; the er_core growth_gap route
// must agree with these (cross-checked in the tests).
double kt_s1_margin(double W, double w) {
  const double base = W * (1.0 - w);
  return std::log(base + 2400.0 * w) -
         (0.33 * std::log(base + 2500.0 * w) +
          0.66 * std::log(base + 2400.0 * w) +
          0.01 * std::log(base));
}

double kt_s2_margin(double W, double w) {
  const double base = W * (1.0 - w);
  return (0.33 * std::log(base + 2500.0 * w) + 0.67 * std::log(base)) -
         (0.34 * std::log(base + 2400.0 * w) + 0.66 * std::log(base));
}

double original_s1_margin(double W, double w) {
  const double base = W * (1.0 - w);
  return std::log(base + kMillion100 * w) -
         (0.10 * std::log(base + kMillion500 * w) +
          0.89 * std::log(base + kMillion100 * w) +
          0.01 * std::log(base));
}

double original_s2_margin(double W, double w) {
  const double base = W * (1.0 - w);
  return (0.10 * std::log(base + kMillion500 * w) + 0.90 * std::log(base)) -
         (0.11 * std::log(base + kMillion100 * w) + 0.89 * std::log(base));
}

void check_point(double W, double w) {
  if (!(W > 0.0)) throw std::invalid_argument("endowment must be > 0");
  if (!(w > 0.0) || !(w < 1.0)) throw std::invalid_argument("attention must lie in (0,1)");
}

}  // namespace

AllaisScenario scenario(ScenarioName name) {
  switch (name) {
    case ScenarioName::KT_S1:
      return {name, Lottery::sure(2400.0),
              Lottery({{2500.0, 0.33}, {2400.0, 0.66}, {0.0, 0.01}})};
    case ScenarioName::KT_S2:
      return {name, Lottery({{2400.0, 0.34}, {0.0, 0.66}}),
              Lottery({{2500.0, 0.33}, {0.0, 0.67}})};
    case ScenarioName::OriginalS1:
      return {name, Lottery::sure(kMillion100),
              Lottery({{kMillion500, 0.10}, {kMillion100, 0.89}, {0.0, 0.01}})};
    case ScenarioName::OriginalS2:
      return {name, Lottery({{kMillion100, 0.11}, {0.0, 0.89}}),
              Lottery({{kMillion500, 0.10}, {0.0, 0.90}})};
  }
  throw std::invalid_argument("unknown scenario");
}

bool kt_s1_holds(double endowment, double attention) {
  check_point(endowment, attention);
  return kt_s1_margin(endowment, attention) > 0.0;
}

bool kt_s2_holds(double endowment, double attention) {
  check_point(endowment, attention);
  return kt_s2_margin(endowment, attention) > 0.0;
}

bool original_s1_holds(double endowment, double attention) {
  check_point(endowment, attention);
  return original_s1_margin(endowment, attention) > 0.0;
}

bool original_s2_holds(double endowment, double attention) {
  check_point(endowment, attention);
  return original_s2_margin(endowment, attention) > 0.0;
}

std::vector<RegionPoint> region_sweep(ParadoxVariant variant,
                                      const std::vector<double>& endowments,
                                      const std::vector<double>& attentions) {
  if (endowments.empty() || attentions.empty()) {
    throw std::invalid_argument("region grids must be non-empty");
  }
  const bool kt = (variant == ParadoxVariant::KT);
  std::vector<RegionPoint> points;
  points.reserve(endowments.size() * attentions.size());
  for (double W : endowments) {
    for (double w : attentions) {
      points.push_back({W, w,
                        kt ? kt_s1_holds(W, w) : original_s1_holds(W, w),
                        kt ? kt_s2_holds(W, w) : original_s2_holds(W, w)});
    }
  }
  return points;
}

ParadoxReport paradox_consistency_report(ParadoxVariant variant, double endowment,
                                         int grid) {
  if (!(endowment > 0.0)) throw std::invalid_argument("endowment must be > 0");
  const bool kt = (variant == ParadoxVariant::KT);
  const auto s1 = scenario(kt ? ScenarioName::KT_S1 : ScenarioName::OriginalS1);

  ParadoxReport report{variant, endowment,
                       critical_attention(s1.left, s1.right, endowment, grid),
                       false, false};
  report.degenerate = report.wstar.all_tie || report.wstar.roots.empty();

  // scan for any fixed w satisfying both modal-choice inequalities
  const double lo = 1e-9, hi = 1.0 - 1e-9;
  for (int i = 0; i < grid; ++i) {
    const double w = lo + (hi - lo) * static_cast<double>(i) / (grid - 1);
    const bool s1_ok = kt ? kt_s1_holds(endowment, w) : original_s1_holds(endowment, w);
    const bool s2_ok = kt ? kt_s2_holds(endowment, w) : original_s2_holds(endowment, w);
    if (s1_ok && s2_ok) {
      report.both_satisfiable = true;
      break;
    }
  }
  return report;
}

}  // namespace evor
