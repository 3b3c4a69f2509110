#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "CLI11.hpp"

#include "evor/allais.hpp"
#include "evor/dynamics.hpp"
#include "evor/er_core.hpp"
#include "evor/io.hpp"
#include "evor/lottery.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";
constexpr int kExitParseError = 2;
constexpr int kExitInvariantError = 3;

// Data outputs stay byte-identical across runs; the timestamp lives only in
// the manifest sidecar, which golden comparisons skip.
void write_manifest(const std::string& out_path, const std::string& command,
                    const json& parameters, std::uint64_t seed) {
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  json manifest{
      {"command", command},
      {"parameters", parameters},
      {"seed", seed},
      {"version", kVersion},
      {"timestamp_unix_ms",
       std::chrono::duration_cast<std::chrono::milliseconds>(now).count()}};
  std::ofstream f(out_path + ".manifest.json");
  f << manifest.dump(2) << "\n";
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw evor::ParseError("cannot open output file: " + out_path);
    f << payload;
    if (!payload.empty() && payload.back() != '\n') f << "\n";
  }
}

std::vector<double> parse_range(const std::string& range_spec) {
  // min:max:count
  double lo = 0, hi = 0;
  long count = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(range_spec);
  if (!(in >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' || count < 1) {
    throw evor::ParseError("bad range, expected min:max:count — got " + range_spec);
  }
  std::vector<double> grid(count);
  for (long i = 0; i < count; ++i) {
    grid[i] = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  }
  return grid;
}

struct Options {
  std::string lottery_a, lottery_b, joint;
  double endowment = 1.0;
  double attention = 0.5;
  double tolerance = evor::kDefaultTieTolerance;
  int w_grid = evor::kDefaultWstarGrid;
  std::string endowment_range, attention_range;
  std::uint64_t seed = 0;
  long replicates = 1000;
  long generations = 100000;
  double fixation_epsilon = 1e-6;
  double initial_frequency = 0.5;
  std::string out, format = "csv", trajectory_out, variant = "kt";
};

json args_json(const Options& o, const std::initializer_list<const char*>& keys) {
  json all{{"lottery_a", o.lottery_a}, {"lottery_b", o.lottery_b}, {"joint", o.joint},
           {"endowment", o.endowment}, {"attention", o.attention},
           {"tolerance", o.tolerance}, {"w_grid", o.w_grid},
           {"endowment_range", o.endowment_range}, {"attention_range", o.attention_range},
           {"seed", o.seed}, {"replicates", o.replicates}, {"generations", o.generations},
           {"fixation_epsilon", o.fixation_epsilon},
           {"initial_frequency", o.initial_frequency}, {"format", o.format},
           {"variant", o.variant}};
  json picked;
  for (const char* k : keys) picked[k] = all.at(k);
  return picked;
}

int run_classify(const Options& o) {
  const auto lot_a = evor::load_lottery(o.lottery_a);
  const auto lot_b = evor::load_lottery(o.lottery_b);
  const evor::FitnessParams params(o.endowment, o.attention);
  const auto verdict = evor::classify(lot_a, lot_b, params, o.tolerance);
  json out = evor::to_json(verdict);
  out["log_fitness_mean_a"] = evor::log_fitness_mean(lot_a, params);
  out["log_fitness_mean_b"] = evor::log_fitness_mean(lot_b, params);
  out["endowment"] = o.endowment;
  out["attention"] = o.attention;
  emit(out.dump(2), o.out);
  if (!o.out.empty()) {
    write_manifest(o.out, "classify",
                   args_json(o, {"lottery_a", "lottery_b", "endowment", "attention",
                                 "tolerance"}),
                   0);
  }
  return 0;
}

int run_wstar(const Options& o) {
  const auto lot_a = evor::load_lottery(o.lottery_a);
  const auto lot_b = evor::load_lottery(o.lottery_b);
  const std::vector<double> endowments = o.endowment_range.empty()
                                             ? std::vector<double>{o.endowment}
                                             : parse_range(o.endowment_range);
  const auto curve = evor::sweep_wstar(lot_a, lot_b, endowments, o.w_grid);
  emit(o.format == "json" ? evor::to_json(curve).dump(2) : evor::to_csv(curve), o.out);
  if (!o.out.empty()) {
    write_manifest(o.out, "wstar",
                   args_json(o, {"lottery_a", "lottery_b", "endowment",
                                 "endowment_range", "w_grid", "format"}),
                   0);
  }
  return 0;
}

int run_simulate(const Options& o) {
  const evor::FitnessParams params(o.endowment, o.attention);
  evor::SimConfig config;
  config.seed = o.seed;
  config.max_generations = o.generations;
  config.replicates = o.replicates;
  config.fixation_epsilon = o.fixation_epsilon;
  config.initial_frequency = o.initial_frequency;

  evor::FixationReport report;
  std::optional<evor::Trajectory> trajectory;
  if (!o.joint.empty()) {
    const auto joint = evor::load_joint_lottery(o.joint);
    report = evor::estimate_fixation(joint, params, config);
    if (!o.trajectory_out.empty()) trajectory = evor::simulate_trajectory(joint, params, config);
  } else {
    const auto lot_a = evor::load_lottery(o.lottery_a);
    const auto lot_b = evor::load_lottery(o.lottery_b);
    report = evor::estimate_fixation(lot_a, lot_b, params, config);
    if (!o.trajectory_out.empty()) {
      trajectory = evor::simulate_trajectory(lot_a, lot_b, params, config);
    }
  }

  json out = evor::to_json(report);
  out["endowment"] = o.endowment;
  out["attention"] = o.attention;
  emit(out.dump(2), o.out);
  const json params_echo = args_json(
      o, {"lottery_a", "lottery_b", "joint", "endowment", "attention", "seed",
          "replicates", "generations", "fixation_epsilon", "initial_frequency"});
  if (!o.out.empty()) write_manifest(o.out, "simulate", params_echo, o.seed);
  if (trajectory) {
    emit(evor::to_csv(*trajectory), o.trajectory_out);
    write_manifest(o.trajectory_out, "simulate --trajectory", params_echo, o.seed);
  }
  return 0;
}

int run_allais(const Options& o) {
  const evor::ParadoxVariant variant =
      o.variant == "original" ? evor::ParadoxVariant::Original : evor::ParadoxVariant::KT;
  const std::vector<double> endowments = o.endowment_range.empty()
                                             ? std::vector<double>{o.endowment}
                                             : parse_range(o.endowment_range);
  const std::vector<double> attentions = o.attention_range.empty()
                                             ? parse_range("0.01:0.99:99")
                                             : parse_range(o.attention_range);

  if (!o.out.empty()) {
    const auto points = evor::region_sweep(variant, endowments, attentions);
    emit(evor::to_csv(points), o.out);
    write_manifest(o.out, "allais",
                   args_json(o, {"variant", "endowment", "endowment_range",
                                 "attention_range", "w_grid"}),
                   0);
  }

  json summary = json::array();
  for (double W : endowments) {
    summary.push_back(evor::to_json(evor::paradox_consistency_report(variant, W, o.w_grid)));
  }
  std::cout << summary.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evolutionary-rationality toolkit: lottery classification, "
               "attention thresholds, population-dynamics simulation, and "
               "Allais-paradox region data"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "Classify the ER option of a lottery pair");
  classify->add_option("--lottery-a", o.lottery_a, "Lottery A (file or inline JSON)")->required();
  classify->add_option("--lottery-b", o.lottery_b, "Lottery B (file or inline JSON)")->required();
  classify->add_option("--endowment", o.endowment, "Endowment W");
  classify->add_option("--attention", o.attention, "Attention degree w")->required();
  classify->add_option("--tolerance", o.tolerance, "Tie tolerance on the gap");
  classify->add_option("--out", o.out, "Output file (default stdout)");

  auto* wstar = app.add_subcommand("wstar", "Solve for the critical attention degree w*");
  wstar->add_option("--lottery-a", o.lottery_a)->required();
  wstar->add_option("--lottery-b", o.lottery_b)->required();
  wstar->add_option("--endowment", o.endowment, "Single endowment W");
  wstar->add_option("--endowment-range", o.endowment_range, "W sweep as min:max:count");
  wstar->add_option("--w-grid", o.w_grid, "Bracketing grid size");
  wstar->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  wstar->add_option("--out", o.out);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo fixation / growth-rate run");
  simulate->add_option("--lottery-a", o.lottery_a);
  simulate->add_option("--lottery-b", o.lottery_b);
  simulate->add_option("--joint", o.joint, "Joint lottery (file or inline JSON)");
  simulate->add_option("--endowment", o.endowment);
  simulate->add_option("--attention", o.attention)->required();
  simulate->add_option("--seed", o.seed);
  simulate->add_option("--replicates", o.replicates);
  simulate->add_option("--generations", o.generations);
  simulate->add_option("--fixation-epsilon", o.fixation_epsilon);
  simulate->add_option("--initial-frequency", o.initial_frequency);
  simulate->add_option("--trajectory", o.trajectory_out, "Also write a per-generation CSV");
  simulate->add_option("--out", o.out);

  auto* allais = app.add_subcommand("allais", "Allais-paradox region data and w* summary");
  allais->add_option("--variant", o.variant, "kt or original")
      ->check(CLI::IsMember({"kt", "original"}));
  allais->add_option("--endowment", o.endowment);
  allais->add_option("--endowment-range", o.endowment_range, "min:max:count");
  allais->add_option("--attention-range", o.attention_range, "min:max:count");
  allais->add_option("--w-grid", o.w_grid);
  allais->add_option("--out", o.out, "Region CSV output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitParseError;
  }

  try {
    if (*classify) return run_classify(o);
    if (*wstar) return run_wstar(o);
    if (*simulate) {
      if (o.joint.empty() && (o.lottery_a.empty() || o.lottery_b.empty())) {
        throw evor::ParseError("simulate needs --joint or both --lottery-a and --lottery-b");
      }
      return run_simulate(o);
    }
    if (*allais) return run_allais(o);
  } catch (const evor::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvariantError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
