#ifndef EVOR_ALLAIS_HPP
#define EVOR_ALLAIS_HPP

#include <vector>

#include "evor/er_core.hpp"
#include "evor/lottery.hpp"

namespace evor {

enum class ScenarioName { OriginalS1, OriginalS2, KT_S1, KT_S2 };
enum class ParadoxVariant { KT, Original };

// Binary choice pair; by convention `left` is the sure-leaning option
// (A resp. C) and `right` the riskier one (B resp. D).
struct AllaisScenario {
  ScenarioName name;
  Lottery left;
  Lottery right;
};

AllaisScenario scenario(ScenarioName name);

// Scenario 1, KT stakes: the sure $2400 (option A) is the ER option at (W,w).
bool kt_s1_holds(double endowment, double attention);
// Scenario 2, KT stakes: option D beats C at (W,w).
bool kt_s2_holds(double endowment, double attention);

bool original_s1_holds(double endowment, double attention);
bool original_s2_holds(double endowment, double attention);

struct RegionPoint {
  double endowment;
  double attention;
  bool prefers_A_in_S1;
  bool prefers_D_in_S2;
};

// Evaluates both scenario inequalities over the (W,w) grid, row-major
// (endowments outer, attentions inner).
std::vector<RegionPoint> region_sweep(ParadoxVariant variant,
                                      const std::vector<double>& endowments,
                                      const std::vector<double>& attentions);

struct ParadoxReport {
  ParadoxVariant variant;
  double endowment;
  WstarResult wstar;       // threshold(s) of the scenario-1 pair
  bool both_satisfiable;   // exists w with S1-choose-A and S2-choose-D
  bool degenerate;         // no threshold structure (gap never changes sign)
};

// Verifies that no single fixed w rationalizes both modal choices; the
// observed A-and-D pattern needs different attention degrees per scenario.
ParadoxReport paradox_consistency_report(ParadoxVariant variant, double endowment,
                                         int grid = kDefaultWstarGrid);

}  // namespace evor

#endif
