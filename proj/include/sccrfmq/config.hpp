#ifndef SCCRFMQ_CONFIG_HPP
#define SCCRFMQ_CONFIG_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sccrfmq/learner.hpp"
#include "sccrfmq/matrix_game.hpp"

namespace sccrfmq {

enum class GameKind { kCg, kPscg, kBoat, kCustomGrid };
enum class AlgoKind { kSccRfmq, kRfmq, kSmc, kSmcRfmq, kCala };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* to_string(GameKind game);
const char* to_string(AlgoKind algo);
GameKind parse_game(const std::string& text);
AlgoKind parse_algo(const std::string& text);

// Fully resolved experiment description. Defaults follow the benchmark
// parameter table and depend on game/algo/agent count; see load_config.
struct ExperimentConfig {
  GameKind game = GameKind::kCg;
  int agents = 2;
  std::vector<AlgoKind> algos;        // one per agent
  std::vector<int> samples;           // sample-set size per agent
  std::vector<HyperParams> params;    // resolved per agent
  long episodes = 0;
  int runs = 0;
  std::uint64_t seed = 0;
  InitMode init = InitMode::kEvenlySpaced;
  std::string out_dir = "out";
  int threads = 1;
  long step_cap = 200;  // boat episode cap
  int window = 1000;    // trailing-mean window
  bool write_snapshot = false;

  Grid3 grid{};   // custom-grid payoffs
  Grid3 grid2{};  // optional second grid -> stochastic custom game
  bool has_grid2 = false;
};

// Build and validate a config from flat key=value pairs (CLI flags and
// config files both reduce to this form). Unknown keys are rejected; unset
// fields get game/algo-dependent defaults.
ExperimentConfig load_config(const std::map<std::string, std::string>& kv);

// Parse a flat key=value config file ('#' starts a comment).
std::map<std::string, std::string> read_config_file(const std::string& path);

// Resolved config as key=value text (written next to experiment outputs).
std::string describe(const ExperimentConfig& config);

// The game spec for a matrix-game config. Throws for the boat.
MatrixGameSpec matrix_spec_of(const ExperimentConfig& config);

}  // namespace sccrfmq

#endif  // SCCRFMQ_CONFIG_HPP
