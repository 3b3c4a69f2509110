// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] is the path of the CLI binary (for the determinism run).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "evor/allais.hpp"
#include "evor/dynamics.hpp"
#include "evor/er_core.hpp"
#include "evor/lottery.hpp"

using namespace evor;

namespace {

int g_failures = 0;

void report(int criterion, const char* label, bool ok, const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, label,
              detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Lottery random_positive_lottery(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size_dist(2, 4);
  std::uniform_real_distribution<double> payoff_dist(0.1, 10.0);
  std::uniform_real_distribution<double> weight_dist(0.05, 1.0);
  const int n = size_dist(rng);
  std::vector<double> weights(n);
  double sum = 0.0;
  for (auto& w : weights) { w = weight_dist(rng); sum += w; }
  std::vector<Outcome> outcomes;
  double acc = 0.0;
  for (int i = 0; i < n - 1; ++i) {
    outcomes.push_back({payoff_dist(rng), weights[i] / sum});
    acc += weights[i] / sum;
  }
  outcomes.push_back({payoff_dist(rng), 1.0 - acc});
  return Lottery(std::move(outcomes));
}

const Lottery kSure2 = Lottery::sure(2.0);
const Lottery kRisky({{4.0, 0.5}, {0.5, 0.5}});

// --- criteria -------------------------------------------------------------

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto s1 = scenario(ScenarioName::KT_S1);
  const auto res = critical_attention(s1.left, s1.right, 14000.0);
  const double dt = seconds_since(t0);
  const bool ok = res.roots.size() == 1 && res.roots[0] >= 0.838 && res.roots[0] <= 0.848 &&
                  dt < 1.0;
  std::ostringstream d;
  d << "w* = " << (res.roots.empty() ? 0.0 : res.roots[0]) << ", " << res.roots.size()
    << " root(s), " << dt << " s";
  report(1, "KT threshold at W=14000 in [0.838, 0.848]", ok, d.str());
}

void criterion_2() {
  const auto s1 = scenario(ScenarioName::KT_S1);
  const auto s2 = scenario(ScenarioName::KT_S2);
  bool complement_ok = true;
  bool roots_ok = true;
  double worst_root_diff = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double W = 1000.0 + (50000.0 - 1000.0) * i / 99.0;
    for (int j = 0; j < 100; ++j) {
      const double w = 0.01 + (0.99 - 0.01) * j / 99.0;
      // off-boundary only: skip grid points where the gap is at rounding scale
      if (std::abs(growth_gap(s1.left, s1.right, FitnessParams(W, w))) <= 1e-9) continue;
      if (kt_s1_holds(W, w) == kt_s2_holds(W, w)) complement_ok = false;
    }
    const auto r1 = critical_attention(s1.left, s1.right, W);
    const auto r2 = critical_attention(s2.right, s2.left, W);
    if (r1.roots.size() != 1 || r2.roots.size() != 1) {
      roots_ok = false;
      continue;
    }
    const double diff = std::abs(r1.roots[0] - r2.roots[0]);
    worst_root_diff = std::max(worst_root_diff, diff);
    if (diff > 1e-9) roots_ok = false;
  }
  std::ostringstream d;
  d << "max |w*_S1 - w*_S2| = " << worst_root_diff;
  report(2, "Eq. 13-14 complementarity on 100x100 grid + solver agreement",
         complement_ok && roots_ok, d.str());
}

void criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto orig1 = scenario(ScenarioName::OriginalS1);
  const auto res = critical_attention(orig1.left, orig1.right, 14000.0);
  bool s2_ok = true;
  for (int i = 1; i <= 90; ++i) {
    if (!original_s2_holds(14000.0, i / 100.0)) s2_ok = false;
  }
  const double dt = seconds_since(t0);
  const bool ok = res.roots.size() == 1 && res.roots[0] > 0.99 && s2_ok && dt < 1.0;
  std::ostringstream d;
  d << "S1 threshold = " << (res.roots.empty() ? 0.0 : res.roots[0]) << ", " << dt << " s";
  report(3, "original version: S1 threshold > 0.99, S2 holds for w <= 0.9", ok, d.str());
}

void criterion_4() {
  std::mt19937_64 rng(2024);
  bool ok = true;
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Lottery a = random_positive_lottery(rng);
    const Lottery b = random_positive_lottery(rng);
    const double ga = payoff_geometric_mean(a), gb = payoff_geometric_mean(b);
    if (std::abs(ga - gb) > 1e-3 * std::max(ga, gb)) {
      const auto v = classify(a, b, FitnessParams(1.0, 1.0 - 1e-6));
      if (v.tag != (ga > gb ? Choice::OptionA : Choice::OptionB)) ok = false;
      ++checked;
    }
    const double ma = mean(a), mb = mean(b);
    if (std::abs(ma - mb) > 1e-3 * std::max(ma, mb)) {
      const auto v = classify(a, b, FitnessParams(1.0, 1e-6));
      if (v.tag != (ma > mb ? Choice::OptionA : Choice::OptionB)) ok = false;
      ++checked;
    }
  }
  // zero-annihilation convention at large w
  const auto kt1 = scenario(ScenarioName::KT_S1);
  const auto orig1 = scenario(ScenarioName::OriginalS1);
  for (const auto* s : {&kt1, &orig1}) {
    if (classify_large_w_limit(s->left, s->right).tag != Choice::OptionA) ok = false;
    if (classify(s->left, s->right, FitnessParams(1.0, 1.0 - 1e-6)).tag != Choice::OptionA) {
      ok = false;
    }
  }
  std::ostringstream d;
  d << checked << " decisive orderings checked";
  report(4, "w->0 / w->1 limit cases on 200 random pairs", ok, d.str());
}

void criterion_5() {
  std::mt19937_64 rng(55);
  auto unit = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  bool ok = true;
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double x = unit();
    if (x == 0.0 || x == 1.0) continue;
    const double a = 10.0 * unit();
    const double b = 10.0 * unit();
    const FitnessParams p(1.0, 0.01 + 0.98 * unit());
    const double direct = step_frequency(x, a, b, p);
    const double via_delta = x + step_delta(x, a, b, p);
    const double u_next = step_odds(x / (1.0 - x), a, b, p);
    const double via_odds = u_next / (1.0 + u_next);
    const double err = std::max(std::abs(direct - via_delta), std::abs(direct - via_odds));
    worst = std::max(worst, err);
    if (err > 1e-12) ok = false;
  }
  std::ostringstream d;
  d << "max pairwise deviation = " << worst;
  report(5, "three-form recurrence equivalence on 1e4 random tuples", ok, d.str());
}

void criterion_6() {
  const auto t0 = std::chrono::steady_clock::now();
  const FitnessParams p(1.0, 0.99);
  SimConfig config;
  config.seed = 6;
  config.max_generations = 100000;
  const double gap = growth_gap(kSure2, kRisky, p);
  const double sd = log_ratio_step_sd(kSure2, kRisky, p);
  const double est = estimate_growth_rate(kSure2, kRisky, p, config);
  const double bound = 4.0 * sd / std::sqrt(static_cast<double>(config.max_generations));
  const double dt = seconds_since(t0);
  const bool ok = std::abs(est - gap) <= bound && dt < 5.0;
  std::ostringstream d;
  d << "estimate " << est << " vs analytic gap " << gap << ", bound " << bound << ", "
    << dt << " s";
  report(6, "SLLN growth-rate estimate within 4*sigma/sqrt(n)", ok, d.str());
}

void criterion_7() {
  const auto t0 = std::chrono::steady_clock::now();
  const FitnessParams p(1.0, 0.99);
  SimConfig config;
  config.seed = 7;
  config.max_generations = 10000;
  config.replicates = 1000;
  const auto up = estimate_fixation(kSure2, kRisky, p, config);
  const auto down = estimate_fixation(kRisky, kSure2, p, config);
  const double dt = seconds_since(t0);
  const bool ok = up.fraction_near_one >= 0.95 && up.predicted_state == PredictedState::NearOne &&
                  down.fraction_near_zero >= 0.95 &&
                  down.predicted_state == PredictedState::NearZero && dt < 30.0;
  std::ostringstream d;
  d << "near-one " << up.fraction_near_one << ", swapped near-zero " << down.fraction_near_zero
    << ", " << dt << " s";
  report(7, "SLS verification: >= 95% absorption in the predicted state", ok, d.str());
}

void criterion_8() {
  const FitnessParams p(1.0, 0.5);
  auto err = [&](double eps) {
    const Lottery lot({{1.0 + eps, 0.5}, {1.0 - eps, 0.5}});
    return std::abs(taylor_log_fitness_mean(lot, p) - log_fitness_mean(lot, p));
  };
  const double ratio = err(0.1) / err(0.05);
  const bool ok = ratio >= 10.0 && ratio <= 24.0;
  std::ostringstream d;
  d << "error ratio = " << ratio << " (theoretical 16)";
  report(8, "Taylor approximation error shrinks ~16x when spread halves", ok, d.str());
}

void criterion_9() {
  std::mt19937_64 rng(99);
  bool ok = true;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Lottery a = random_positive_lottery(rng);
    const Lottery b = random_positive_lottery(rng);
    const FitnessParams base_p(2.0, 0.4);
    const auto base = classify(a, b, base_p);
    for (double lambda : {0.1, 10.0, 1000.0}) {
      std::vector<Outcome> sa, sb;
      for (const auto& o : a.outcomes()) sa.push_back({lambda * o.payoff, o.prob});
      for (const auto& o : b.outcomes()) sb.push_back({lambda * o.payoff, o.prob});
      const auto scaled =
          classify(Lottery(sa), Lottery(sb), FitnessParams(2.0 * lambda, 0.4));
      const double diff = std::abs(scaled.gap - base.gap);
      worst = std::max(worst, diff);
      if (scaled.tag != base.tag || diff > 1e-12) ok = false;
    }
  }
  std::ostringstream d;
  d << "max gap deviation = " << worst;
  report(9, "joint-scale invariance of verdicts and gaps", ok, d.str());
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream out;
  out << f.rdbuf();
  return out.str();
}

void criterion_10(const std::string& cli) {
  if (cli.empty()) {
    report(10, "CLI determinism", false, "CLI path not supplied");
    return;
  }
  const std::string dir = "acceptance_cli_tmp";
  std::system(("mkdir -p " + dir).c_str());
  const std::string lot_a = R"('{"outcomes":[{"payoff":2,"prob":1}]}')";
  const std::string lot_b = R"('{"outcomes":[{"payoff":4,"prob":0.5},{"payoff":0.5,"prob":0.5}]}')";
  bool ok = true;
  for (int run = 0; run < 2; ++run) {
    const std::string tag = dir + "/run" + std::to_string(run);
    const std::string cmd = cli + " simulate --lottery-a " + lot_a + " --lottery-b " + lot_b +
                            " --attention 0.99 --seed 12345 --replicates 200" +
                            " --generations 5000 --out " + tag + ".json --trajectory " +
                            tag + ".csv";
    if (std::system(cmd.c_str()) != 0) ok = false;
  }
  const std::string r0 = read_file(dir + "/run0.json");
  const std::string r1 = read_file(dir + "/run1.json");
  const std::string t0 = read_file(dir + "/run0.csv");
  const std::string t1 = read_file(dir + "/run1.csv");
  ok = ok && !r0.empty() && r0 == r1 && !t0.empty() && t0 == t1;
  report(10, "cmd_simulate byte-identical under identical seeds", ok);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10(cli);
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
