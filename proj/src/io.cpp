#include "evor/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace evor {

namespace {

using nlohmann::json;

double require_number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw ParseError(std::string("missing or non-numeric field \"") + key + "\"");
  }
  return j.at(key).get<double>();
}

const json& require_outcomes(const json& j) {
  if (!j.is_object() || !j.contains("outcomes") || !j.at("outcomes").is_array()) {
    throw ParseError("expected an object with an \"outcomes\" array");
  }
  return j.at("outcomes");
}

}  // namespace

json to_json(const Lottery& lot) {
  json arr = json::array();
  for (const auto& o : lot.outcomes()) arr.push_back({{"payoff", o.payoff}, {"prob", o.prob}});
  return json{{"outcomes", std::move(arr)}};
}

json to_json(const JointLottery& joint) {
  json arr = json::array();
  for (const auto& o : joint.outcomes()) {
    arr.push_back({{"payoff_a", o.payoff_a}, {"payoff_b", o.payoff_b}, {"prob", o.prob}});
  }
  return json{{"outcomes", std::move(arr)}};
}

Lottery lottery_from_json(const json& j) {
  std::vector<Outcome> outcomes;
  for (const auto& e : require_outcomes(j)) {
    outcomes.push_back({require_number(e, "payoff"), require_number(e, "prob")});
  }
  return Lottery(std::move(outcomes));
}

JointLottery joint_from_json(const json& j) {
  std::vector<JointOutcome> outcomes;
  for (const auto& e : require_outcomes(j)) {
    outcomes.push_back({require_number(e, "payoff_a"), require_number(e, "payoff_b"),
                        require_number(e, "prob")});
  }
  return JointLottery(std::move(outcomes));
}

Lottery lottery_from_csv(std::istream& in) {
  std::vector<Outcome> outcomes;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    if (first && line.rfind("payoff", 0) == 0) { first = false; continue; }
    first = false;
    std::istringstream row(line);
    std::string payoff_s, prob_s;
    if (!std::getline(row, payoff_s, ',') || !std::getline(row, prob_s)) {
      throw ParseError("bad CSV row, expected `payoff,prob`: " + line);
    }
    try {
      size_t p1 = 0, p2 = 0;
      const double payoff = std::stod(payoff_s, &p1);
      const double prob = std::stod(prob_s, &p2);
      outcomes.push_back({payoff, prob});
    } catch (const std::exception&) {
      throw ParseError("non-numeric CSV row: " + line);
    }
  }
  if (outcomes.empty()) throw ParseError("empty lottery CSV");
  return Lottery(std::move(outcomes));
}

std::string to_csv(const Lottery& lot) {
  std::string out = "payoff,prob\n";
  for (const auto& o : lot.outcomes()) {
    out += format_double(o.payoff) + "," + format_double(o.prob) + "\n";
  }
  return out;
}

namespace {

json parse_spec(const std::string& spec, bool& is_csv) {
  is_csv = false;
  if (!spec.empty() && spec.front() == '{') {
    json j = json::parse(spec, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed inline JSON lottery");
    return j;
  }
  std::ifstream file(spec);
  if (!file) throw ParseError("cannot open lottery file: " + spec);
  if (spec.size() >= 4 && spec.substr(spec.size() - 4) == ".csv") {
    is_csv = true;
    return json{};  // caller re-reads via CSV path
  }
  json j = json::parse(file, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON in file: " + spec);
  return j;
}

}  // namespace

Lottery load_lottery(const std::string& spec) {
  bool is_csv = false;
  json j = parse_spec(spec, is_csv);
  if (is_csv) {
    std::ifstream file(spec);
    return lottery_from_csv(file);
  }
  return lottery_from_json(j);
}

JointLottery load_joint_lottery(const std::string& spec) {
  bool is_csv = false;
  json j = parse_spec(spec, is_csv);
  if (is_csv) throw ParseError("joint lotteries are JSON-only");
  return joint_from_json(j);
}

std::string to_string(Choice tag) {
  switch (tag) {
    case Choice::OptionA: return "OptionA";
    case Choice::OptionB: return "OptionB";
    case Choice::Both: return "Both";
  }
  return "?";
}

std::string to_string(PredictedState state) {
  switch (state) {
    case PredictedState::NearOne: return "NearOne";
    case PredictedState::NearZero: return "NearZero";
    case PredictedState::Neutral: return "Neutral";
  }
  return "?";
}

std::string to_string(AbsorbedState state) {
  return state == AbsorbedState::NearOne ? "NearOne" : "NearZero";
}

json to_json(const ERVerdict& verdict) {
  return json{{"verdict", to_string(verdict.tag)}, {"gap", verdict.gap}};
}

json to_json(const SimConfig& config) {
  return json{{"seed", config.seed},
              {"max_generations", config.max_generations},
              {"fixation_epsilon", config.fixation_epsilon},
              {"replicates", config.replicates},
              {"initial_frequency", config.initial_frequency}};
}

json to_json(const FixationReport& report) {
  return json{{"replicates", report.replicates},
              {"fraction_near_one", report.fraction_near_one},
              {"fraction_near_zero", report.fraction_near_zero},
              {"fraction_unabsorbed", report.fraction_unabsorbed},
              {"predicted_state", to_string(report.predicted_state)},
              {"mean_growth_rate", report.mean_growth_rate},
              {"growth_gap", report.growth_gap},
              {"config", to_json(report.config)}};
}

json to_json(const ParadoxReport& report) {
  json roots = json::array();
  for (double r : report.wstar.roots) roots.push_back(r);
  return json{{"variant", report.variant == ParadoxVariant::KT ? "kt" : "original"},
              {"endowment", report.endowment},
              {"wstar", std::move(roots)},
              {"both_satisfiable", report.both_satisfiable},
              {"degenerate", report.degenerate}};
}

std::string to_csv(const Trajectory& trajectory) {
  std::string out = "generation,x,a,b\n";
  for (std::size_t t = 0; t < trajectory.frequencies.size(); ++t) {
    out += std::to_string(t) + "," + format_double(trajectory.frequencies[t]);
    if (t >= 1 && t - 1 < trajectory.rewards.size()) {
      out += "," + format_double(trajectory.rewards[t - 1].first) + "," +
             format_double(trajectory.rewards[t - 1].second);
    } else {
      out += ",,";
    }
    out += "\n";
  }
  return out;
}

std::string to_csv(const WstarCurve& curve) {
  std::string out = "W,wstar\n";
  for (const auto& entry : curve) {
    if (entry.result.roots.empty()) {
      out += format_double(entry.endowment) + ",\n";
      continue;
    }
    for (double root : entry.result.roots) {
      out += format_double(entry.endowment) + "," + format_double(root) + "\n";
    }
  }
  return out;
}

json to_json(const WstarCurve& curve) {
  json arr = json::array();
  for (const auto& entry : curve) {
    json roots = json::array();
    for (double r : entry.result.roots) roots.push_back(r);
    arr.push_back({{"W", entry.endowment},
                   {"wstar", std::move(roots)},
                   {"all_tie", entry.result.all_tie},
                   {"bracket_grid_size", entry.result.bracket_grid_size}});
  }
  return arr;
}

std::string to_csv(const std::vector<RegionPoint>& points) {
  std::string out = "W,w,s1_prefers_A,s2_prefers_D\n";
  for (const auto& p : points) {
    out += format_double(p.endowment) + "," + format_double(p.attention) + "," +
           (p.prefers_A_in_S1 ? "1" : "0") + "," + (p.prefers_D_in_S2 ? "1" : "0") + "\n";
  }
  return out;
}

std::string format_double(double value) { return json(value).dump(); }

}  // namespace evor
