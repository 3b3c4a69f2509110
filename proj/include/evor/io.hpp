#ifndef EVOR_IO_HPP
#define EVOR_IO_HPP

#include <istream>
#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "evor/allais.hpp"
#include "evor/dynamics.hpp"
#include "evor/er_core.hpp"
#include "evor/lottery.hpp"

namespace evor {

// Malformed input (bad JSON/CSV syntax or missing fields). Construction
// invariant violations keep throwing std::invalid_argument so the CLI can
// report the two failure classes with distinct exit codes.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const Lottery& lot);
nlohmann::json to_json(const JointLottery& joint);
Lottery lottery_from_json(const nlohmann::json& j);
JointLottery joint_from_json(const nlohmann::json& j);

// CSV rows `payoff,prob`; an optional leading header line is skipped.
Lottery lottery_from_csv(std::istream& in);
std::string to_csv(const Lottery& lot);

// `{...}` is parsed inline as JSON; anything else is a file path
// (.csv files use the CSV lottery format).
Lottery load_lottery(const std::string& spec);
JointLottery load_joint_lottery(const std::string& spec);

std::string to_string(Choice tag);
std::string to_string(PredictedState state);
std::string to_string(AbsorbedState state);

nlohmann::json to_json(const ERVerdict& verdict);
nlohmann::json to_json(const SimConfig& config);
nlohmann::json to_json(const FixationReport& report);
nlohmann::json to_json(const ParadoxReport& report);

// CSV `generation,x,a,b`; x_0 has empty reward columns.
std::string to_csv(const Trajectory& trajectory);

// CSV header `W,wstar`, one row per (W, root); rootless endowments emit
// a single row with an empty wstar field.
std::string to_csv(const WstarCurve& curve);
nlohmann::json to_json(const WstarCurve& curve);

// CSV header `W,w,s1_prefers_A,s2_prefers_D` (booleans as 1/0).
std::string to_csv(const std::vector<RegionPoint>& points);

// Shortest-round-trip decimal formatting shared by all emitters.
std::string format_double(double value);

}  // namespace evor

#endif
