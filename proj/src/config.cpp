#include "sccrfmq/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

namespace sccrfmq {

namespace {

const std::set<std::string> kKnownKeys = {
    "game",    "agents",   "algo",     "samples", "episodes", "runs",
    "seed",    "init",     "out",      "threads", "step_cap", "window",
    "snapshot", "grid",    "grid2",
    // hyperparameters
    "alpha",   "alpha_f",  "gamma",    "c",       "sigma0",   "delta_d",
    "delta_l", "delta_eps_re", "eta",  "smc_sigma", "tau0",   "tau_period",
    "tau_factor", "kernel_floor", "cala_lambda", "cala_sigma_lower",
    "cala_penalty"};

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' expects a number, got '" +
                      value + "'");
  }
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long x = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' expects an integer, got '" +
                      value + "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const std::uint64_t x = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' expects an integer, got '" +
                      value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("config: key '" + key + "' expects a boolean, got '" +
                    value + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

Grid3 parse_grid(const std::string& key, const std::string& value) {
  const std::vector<std::string> parts = split(value, ',');
  if (parts.size() != 9) {
    throw ConfigError("config: key '" + key +
                      "' expects 9 comma-separated payoffs (row-major, agent "
                      "1 rows)");
  }
  Grid3 grid{};
  for (int i = 0; i < 9; ++i) {
    grid[i / 3][i % 3] = parse_double(key, parts[i]);
  }
  return grid;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

const char* to_string(GameKind game) {
  switch (game) {
    case GameKind::kCg: return "cg";
    case GameKind::kPscg: return "pscg";
    case GameKind::kBoat: return "boat";
    case GameKind::kCustomGrid: return "custom-grid";
  }
  return "?";
}

const char* to_string(AlgoKind algo) {
  switch (algo) {
    case AlgoKind::kSccRfmq: return "scc_rfmq";
    case AlgoKind::kRfmq: return "rfmq";
    case AlgoKind::kSmc: return "smc";
    case AlgoKind::kSmcRfmq: return "smc_rfmq";
    case AlgoKind::kCala: return "cala";
  }
  return "?";
}

GameKind parse_game(const std::string& text) {
  if (text == "cg") return GameKind::kCg;
  if (text == "pscg") return GameKind::kPscg;
  if (text == "boat") return GameKind::kBoat;
  if (text == "custom-grid" || text == "custom") return GameKind::kCustomGrid;
  throw ConfigError("config: unknown game '" + text +
                    "' (expected cg|pscg|boat|custom-grid)");
}

AlgoKind parse_algo(const std::string& text) {
  if (text == "scc_rfmq") return AlgoKind::kSccRfmq;
  if (text == "rfmq") return AlgoKind::kRfmq;
  if (text == "smc") return AlgoKind::kSmc;
  if (text == "smc_rfmq") return AlgoKind::kSmcRfmq;
  if (text == "cala") return AlgoKind::kCala;
  throw ConfigError("config: unknown algorithm '" + text +
                    "' (expected scc_rfmq|rfmq|smc|smc_rfmq|cala)");
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: " + path + ":" + std::to_string(lineno) +
                        ": expected key=value");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

ExperimentConfig load_config(const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    (void)value;
    if (!kKnownKeys.contains(key)) {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
  const auto get = [&kv](const std::string& key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };

  ExperimentConfig cfg;
  const std::string* game = get("game");
  if (!game) throw ConfigError("config: 'game' is required");
  cfg.game = parse_game(*game);
  const bool is_boat = cfg.game == GameKind::kBoat;

  if (const std::string* v = get("agents")) {
    cfg.agents = static_cast<int>(parse_long("agents", *v));
  }
  if (cfg.agents != 1 && cfg.agents != 2) {
    throw ConfigError("config: agents must be 1 or 2");
  }

  std::vector<std::string> algo_names = {"scc_rfmq"};
  if (const std::string* v = get("algo")) algo_names = split(*v, ',');
  if (algo_names.size() == 1 && cfg.agents == 2) {
    algo_names.push_back(algo_names[0]);
  }
  if (static_cast<int>(algo_names.size()) != cfg.agents) {
    throw ConfigError("config: 'algo' must list one algorithm per agent");
  }
  for (const std::string& name : algo_names) {
    cfg.algos.push_back(parse_algo(trim(name)));
  }

  cfg.episodes = is_boat ? 800000 : 80000;
  if (const std::string* v = get("episodes")) {
    cfg.episodes = parse_long("episodes", *v);
  }
  cfg.runs = is_boat ? 10 : 50;
  if (const std::string* v = get("runs")) {
    cfg.runs = static_cast<int>(parse_long("runs", *v));
  }
  if (cfg.episodes < 1) throw ConfigError("config: episodes must be >= 1");
  if (cfg.runs < 1) throw ConfigError("config: runs must be >= 1");

  if (const std::string* v = get("seed")) cfg.seed = parse_u64("seed", *v);
  if (const std::string* v = get("out")) cfg.out_dir = *v;
  if (const std::string* v = get("snapshot")) {
    cfg.write_snapshot = parse_bool("snapshot", *v);
  }

  cfg.threads = std::max(1u, std::thread::hardware_concurrency());
  if (const std::string* v = get("threads")) {
    cfg.threads = static_cast<int>(parse_long("threads", *v));
    if (cfg.threads < 1) throw ConfigError("config: threads must be >= 1");
  }
  if (const std::string* v = get("step_cap")) {
    cfg.step_cap = parse_long("step_cap", *v);
    if (cfg.step_cap < 1) throw ConfigError("config: step_cap must be >= 1");
  }
  if (const std::string* v = get("window")) {
    cfg.window = static_cast<int>(parse_long("window", *v));
    if (cfg.window < 1) throw ConfigError("config: window must be >= 1");
  }
  if (const std::string* v = get("init")) {
    if (*v == "even") {
      cfg.init = InitMode::kEvenlySpaced;
    } else if (*v == "random") {
      cfg.init = InitMode::kUniformRandom;
    } else {
      throw ConfigError("config: init must be 'even' or 'random'");
    }
  }

  // Per-agent sample counts.
  for (int i = 0; i < cfg.agents; ++i) {
    const AlgoKind algo = cfg.algos[i];
    int n = 10;
    if (is_boat) {
      if (algo == AlgoKind::kSccRfmq) n = 5;
      if (algo == AlgoKind::kSmc) n = cfg.agents == 1 ? 25 : 10;
    }
    cfg.samples.push_back(n);
  }
  if (const std::string* v = get("samples")) {
    const int n = static_cast<int>(parse_long("samples", *v));
    if (n < 1) throw ConfigError("config: samples must be >= 1");
    std::fill(cfg.samples.begin(), cfg.samples.end(), n);
  }

  // Per-agent hyperparameters: shared defaults, then algo-specific ones,
  // then user overrides applied uniformly.
  for (int i = 0; i < cfg.agents; ++i) {
    HyperParams p;
    const AlgoKind algo = cfg.algos[i];
    if (algo == AlgoKind::kSmc) {
      p.tau0 = is_boat ? 10.0 : 25.0;
      p.tau_period = is_boat ? 2000 : 5000;
      p.smc_resample_threshold =
          is_boat ? (cfg.agents == 1 ? 0.6 : 0.8) : 0.9;
    } else if (algo == AlgoKind::kSmcRfmq) {
      p.tau0 = 20.0;
      p.tau_period = 5000;
    }
    cfg.params.push_back(p);
  }
  const auto override_all = [&cfg](auto field, double value) {
    for (HyperParams& p : cfg.params) p.*field = value;
  };
  if (const std::string* v = get("alpha")) {
    override_all(&HyperParams::alpha, parse_double("alpha", *v));
  }
  if (const std::string* v = get("alpha_f")) {
    override_all(&HyperParams::alpha_f, parse_double("alpha_f", *v));
  }
  if (const std::string* v = get("gamma")) {
    override_all(&HyperParams::gamma, parse_double("gamma", *v));
  }
  if (const std::string* v = get("c")) {
    const int c = static_cast<int>(parse_long("c", *v));
    for (HyperParams& p : cfg.params) p.resample_period = c;
  }
  if (const std::string* v = get("sigma0")) {
    override_all(&HyperParams::sigma0, parse_double("sigma0", *v));
  }
  if (const std::string* v = get("delta_d")) {
    override_all(&HyperParams::delta_d, parse_double("delta_d", *v));
  }
  if (const std::string* v = get("delta_l")) {
    override_all(&HyperParams::delta_l, parse_double("delta_l", *v));
  }
  if (const std::string* v = get("delta_eps_re")) {
    override_all(&HyperParams::delta_eps_re, parse_double("delta_eps_re", *v));
  }
  if (const std::string* v = get("eta")) {
    override_all(&HyperParams::eta, parse_double("eta", *v));
  }
  if (const std::string* v = get("smc_sigma")) {
    override_all(&HyperParams::smc_resample_threshold,
                 parse_double("smc_sigma", *v));
  }
  if (const std::string* v = get("tau0")) {
    override_all(&HyperParams::tau0, parse_double("tau0", *v));
  }
  if (const std::string* v = get("tau_period")) {
    const long period = parse_long("tau_period", *v);
    for (HyperParams& p : cfg.params) p.tau_period = period;
  }
  if (const std::string* v = get("tau_factor")) {
    override_all(&HyperParams::tau_factor, parse_double("tau_factor", *v));
  }
  if (const std::string* v = get("kernel_floor")) {
    override_all(&HyperParams::kernel_floor, parse_double("kernel_floor", *v));
  }
  if (const std::string* v = get("cala_lambda")) {
    override_all(&HyperParams::cala_lambda, parse_double("cala_lambda", *v));
  }
  if (const std::string* v = get("cala_sigma_lower")) {
    override_all(&HyperParams::cala_sigma_lower,
                 parse_double("cala_sigma_lower", *v));
  }
  if (const std::string* v = get("cala_penalty")) {
    override_all(&HyperParams::cala_penalty, parse_double("cala_penalty", *v));
  }

  if (const std::string* v = get("grid")) {
    cfg.grid = parse_grid("grid", *v);
  } else if (cfg.game == GameKind::kCustomGrid) {
    throw ConfigError("config: custom-grid requires 'grid'");
  }
  if (const std::string* v = get("grid2")) {
    if (cfg.game != GameKind::kCustomGrid) {
      throw ConfigError("config: 'grid2' applies to custom-grid games only");
    }
    cfg.grid2 = parse_grid("grid2", *v);
    cfg.has_grid2 = true;
  }

  // Cross-field validation.
  const bool any_cala = std::any_of(cfg.algos.begin(), cfg.algos.end(),
                                    [](AlgoKind a) { return a == AlgoKind::kCala; });
  if (any_cala) {
    if (cfg.game != GameKind::kCg && cfg.game != GameKind::kPscg) {
      throw ConfigError("config: cala runs only on cg or pscg");
    }
    if (!std::all_of(cfg.algos.begin(), cfg.algos.end(),
                     [](AlgoKind a) { return a == AlgoKind::kCala; })) {
      throw ConfigError("config: cala cannot be mixed with other algorithms");
    }
  }
  if (cfg.agents == 1) {
    if (!is_boat || cfg.algos[0] != AlgoKind::kSmc) {
      throw ConfigError(
          "config: agents=1 is the single-controller smc boat variant only");
    }
  }
  if (!is_boat && cfg.agents != 2) {
    throw ConfigError("config: matrix games need exactly 2 agents");
  }
  for (int i = 0; i < cfg.agents; ++i) {
    if (cfg.algos[i] == AlgoKind::kSccRfmq && cfg.samples[i] < 3) {
      throw ConfigError("config: scc_rfmq needs samples >= 3");
    }
    if (cfg.algos[i] == AlgoKind::kSmc && cfg.agents == 1 &&
        cfg.init == InitMode::kEvenlySpaced) {
      const int m = static_cast<int>(std::lround(std::sqrt(cfg.samples[i])));
      if (m * m != cfg.samples[i]) {
        throw ConfigError(
            "config: single-agent smc with even init needs a square sample "
            "count (e.g. 25 = 5x5)");
      }
    }
    cfg.params[i].validate();
  }
  return cfg;
}

MatrixGameSpec matrix_spec_of(const ExperimentConfig& cfg) {
  switch (cfg.game) {
    case GameKind::kCg: return MatrixGameSpec::climbing();
    case GameKind::kPscg: return MatrixGameSpec::partially_stochastic();
    case GameKind::kCustomGrid:
      return cfg.has_grid2 ? MatrixGameSpec::custom(cfg.grid, cfg.grid2)
                           : MatrixGameSpec::custom(cfg.grid);
    case GameKind::kBoat: break;
  }
  throw ConfigError("config: the boat problem has no payoff grid");
}

std::string describe(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "game=" << to_string(cfg.game) << '\n';
  out << "agents=" << cfg.agents << '\n';
  out << "algo=";
  for (int i = 0; i < cfg.agents; ++i) {
    out << (i ? "," : "") << to_string(cfg.algos[i]);
  }
  out << '\n';
  out << "samples=";
  for (int i = 0; i < cfg.agents; ++i) out << (i ? "," : "") << cfg.samples[i];
  out << '\n';
  out << "episodes=" << cfg.episodes << '\n';
  out << "runs=" << cfg.runs << '\n';
  out << "seed=" << cfg.seed << '\n';
  out << "init=" << (cfg.init == InitMode::kEvenlySpaced ? "even" : "random")
      << '\n';
  out << "threads=" << cfg.threads << '\n';
  out << "window=" << cfg.window << '\n';
  if (cfg.game == GameKind::kBoat) out << "step_cap=" << cfg.step_cap << '\n';
  for (int i = 0; i < cfg.agents; ++i) {
    const HyperParams& p = cfg.params[i];
    out << "agent" << i << ".alpha=" << p.alpha << '\n';
    out << "agent" << i << ".alpha_f=" << p.alpha_f << '\n';
    out << "agent" << i << ".gamma=" << p.gamma << '\n';
    out << "agent" << i << ".c=" << p.resample_period << '\n';
    out << "agent" << i << ".sigma0=" << p.sigma0 << '\n';
    out << "agent" << i << ".delta_d=" << p.delta_d << '\n';
    out << "agent" << i << ".delta_l=" << p.delta_l << '\n';
    out << "agent" << i << ".delta_eps_re=" << p.delta_eps_re << '\n';
    if (cfg.algos[i] == AlgoKind::kSmc || cfg.algos[i] == AlgoKind::kSmcRfmq) {
      out << "agent" << i << ".tau0=" << p.tau0 << '\n';
      out << "agent" << i << ".tau_period=" << p.tau_period << '\n';
      out << "agent" << i << ".tau_factor=" << p.tau_factor << '\n';
      out << "agent" << i << ".smc_sigma=" << p.smc_resample_threshold << '\n';
      out << "agent" << i << ".kernel_floor=" << p.kernel_floor << '\n';
    }
    if (cfg.algos[i] == AlgoKind::kCala) {
      out << "agent" << i << ".cala_lambda=" << p.cala_lambda << '\n';
      out << "agent" << i << ".cala_sigma_lower=" << p.cala_sigma_lower << '\n';
      out << "agent" << i << ".cala_penalty=" << p.cala_penalty << '\n';
    }
  }
  return out.str();
}

}  // namespace sccrfmq
