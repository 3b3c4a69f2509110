#ifndef EVOR_ER_CORE_HPP
#define EVOR_ER_CORE_HPP

#include <vector>

#include "evor/lottery.hpp"

namespace evor {

enum class Choice { OptionA, OptionB, Both };

struct ERVerdict {
  Choice tag;
  double gap;  // <log pi_A> - <log pi_B> (or the limit-case surrogate)
};

inline constexpr double kDefaultTieTolerance = 1e-12;

// <log pi_A> - <log pi_B>; its sign decides which fixation state is
// stochastically locally stable.
double growth_gap(const Lottery& lot_a, const Lottery& lot_b,
                  const FitnessParams& params);

ERVerdict classify(const Lottery& lot_a, const Lottery& lot_b,
                   const FitnessParams& params,
                   double tolerance = kDefaultTieTolerance);

// w -> 0 limit: compare arithmetic means.
ERVerdict classify_small_w_limit(const Lottery& lot_a, const Lottery& lot_b,
                                 double tolerance = kDefaultTieTolerance);

// w -> 1 limit: compare geometric means of the payoffs; a zero payoff
// annihilates that side's product.
ERVerdict classify_large_w_limit(const Lottery& lot_a, const Lottery& lot_b,
                                 double tolerance = kDefaultTieTolerance);

struct WstarResult {
  std::vector<double> roots;      // strictly increasing, all in (0,1)
  int bracket_grid_size = 0;
  std::vector<double> residuals;  // growth_gap evaluated at each root
  bool all_tie = false;           // gap below tie tolerance at every grid point
};

inline constexpr int kDefaultWstarGrid = 1024;

// Scans w over a uniform grid on [1e-9, 1-1e-9], brackets every sign change
// of growth_gap and refines each bracket by bisection to width <= 1e-12.
// An empty root list means the gap never changes sign.
WstarResult critical_attention(const Lottery& lot_a, const Lottery& lot_b,
                               double endowment, int grid = kDefaultWstarGrid);

struct WstarEntry {
  double endowment;
  WstarResult result;
};

using WstarCurve = std::vector<WstarEntry>;

WstarCurve sweep_wstar(const Lottery& lot_a, const Lottery& lot_b,
                       const std::vector<double>& endowments,
                       int grid = kDefaultWstarGrid);

}  // namespace evor

#endif
