#include "evor/er_core.hpp"

#include <cmath>
#include <stdexcept>

namespace evor {

namespace {

constexpr double kWEdge = 1e-9;        // open-interval clip for w
constexpr double kBisectWidth = 1e-12;

ERVerdict verdict_from_gap(double gap, double tolerance) {
  if (gap > tolerance) return {Choice::OptionA, gap};
  if (gap < -tolerance) return {Choice::OptionB, gap};
  return {Choice::Both, gap};
}

}  // namespace

double growth_gap(const Lottery& lot_a, const Lottery& lot_b,
                  const FitnessParams& params) {
  return log_fitness_mean(lot_a, params) - log_fitness_mean(lot_b, params);
}

ERVerdict classify(const Lottery& lot_a, const Lottery& lot_b,
                   const FitnessParams& params, double tolerance) {
  if (tolerance < 0.0) throw std::invalid_argument("tolerance must be >= 0");
  return verdict_from_gap(growth_gap(lot_a, lot_b, params), tolerance);
}

ERVerdict classify_small_w_limit(const Lottery& lot_a, const Lottery& lot_b,
                                 double tolerance) {
  return verdict_from_gap(mean(lot_a) - mean(lot_b), tolerance);
}

ERVerdict classify_large_w_limit(const Lottery& lot_a, const Lottery& lot_b,
                                 double tolerance) {
  return verdict_from_gap(
      payoff_geometric_mean(lot_a) - payoff_geometric_mean(lot_b), tolerance);
}

WstarResult critical_attention(const Lottery& lot_a, const Lottery& lot_b,
                               double endowment, int grid) {
  if (grid < 2) throw std::invalid_argument("bracketing grid must have >= 2 points");

  const auto gap_at = [&](double w) {
    return growth_gap(lot_a, lot_b, FitnessParams(endowment, w));
  };

  WstarResult res;
  res.bracket_grid_size = grid;

  const double lo = kWEdge, hi = 1.0 - kWEdge;
  std::vector<double> ws(grid), fs(grid);
  bool all_tie = true;
  for (int i = 0; i < grid; ++i) {
    ws[i] = lo + (hi - lo) * static_cast<double>(i) / (grid - 1);
    fs[i] = gap_at(ws[i]);
    if (std::abs(fs[i]) > kDefaultTieTolerance) all_tie = false;
  }
  res.all_tie = all_tie;
  if (all_tie) return res;

  for (int i = 0; i + 1 < grid; ++i) {
    double a = ws[i], b = ws[i + 1];
    double fa = fs[i], fb = fs[i + 1];
    if (fa == 0.0) {  // grid point is an exact root
      res.roots.push_back(a);
      res.residuals.push_back(0.0);
      continue;
    }
    if (fa * fb >= 0.0) continue;
    while (b - a > kBisectWidth) {
      const double m = 0.5 * (a + b);
      const double fm = gap_at(m);
      if (fm == 0.0) { a = b = m; break; }
      if ((fa < 0.0) == (fm < 0.0)) { a = m; fa = fm; }
      else { b = m; fb = fm; }
    }
    const double root = 0.5 * (a + b);
    res.roots.push_back(root);
    res.residuals.push_back(gap_at(root));
  }
  if (fs[grid - 1] == 0.0) {
    res.roots.push_back(ws[grid - 1]);
    res.residuals.push_back(0.0);
  }
  return res;
}

WstarCurve sweep_wstar(const Lottery& lot_a, const Lottery& lot_b,
                       const std::vector<double>& endowments, int grid) {
  if (endowments.empty()) throw std::invalid_argument("endowment list must be non-empty");
  WstarCurve curve;
  curve.reserve(endowments.size());
  for (double w_endow : endowments) {
    if (!(w_endow > 0.0)) throw std::invalid_argument("endowments must be > 0");
    curve.push_back({w_endow, critical_attention(lot_a, lot_b, w_endow, grid)});
  }
  return curve;
}

}  // namespace evor
