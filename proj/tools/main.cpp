// Command-line front end: seeded experiment runs and payoff colormap dumps.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sccrfmq/config.hpp"
#include "sccrfmq/emit.hpp"
#include "sccrfmq/experiment.hpp"

namespace {

using sccrfmq::ConfigError;

void put(std::map<std::string, std::string>& kv, const std::string& key,
         const std::string& value) {
  kv[key] = value;
}

int cmd_run(const std::map<std::string, std::string>& kv) {
  const sccrfmq::ExperimentConfig cfg = sccrfmq::load_config(kv);
  std::vector<std::string> snapshots;
  sccrfmq::ExperimentResult result;
  result.runs.resize(cfg.runs);
  if (cfg.write_snapshot) {
    // Re-run run 0 with snapshot capture; cost is one extra run.
    result = sccrfmq::run_experiment(cfg);
    sccrfmq::run_single(cfg, 0, &snapshots);
  } else {
    result = sccrfmq::run_experiment(cfg);
  }
  sccrfmq::emit_outputs(result, cfg, snapshots);

  const std::size_t episodes = result.runs[0].rewards.size();
  double final_mean = 0.0;
  for (const auto& run : result.runs) final_mean += run.final_cumulative_avg();
  final_mean /= static_cast<double>(result.runs.size());
  std::cout << "wrote " << cfg.out_dir << " (" << cfg.runs << " runs x "
            << episodes << " episodes, final mean cumavg "
            << sccrfmq::format_double(final_mean) << ")\n";
  return 0;
}

int cmd_colormap(const std::string& game, int resolution,
                 const std::string& out_path) {
  sccrfmq::MatrixGameSpec spec;
  const sccrfmq::GameKind kind = sccrfmq::parse_game(game);
  if (kind == sccrfmq::GameKind::kCg) {
    spec = sccrfmq::MatrixGameSpec::climbing();
  } else if (kind == sccrfmq::GameKind::kPscg) {
    spec = sccrfmq::MatrixGameSpec::partially_stochastic();
  } else {
    throw ConfigError("colormap: game must be cg or pscg");
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("colormap: cannot open '" + out_path + "'");
  if (std::filesystem::path(out_path).extension() == ".ppm") {
    sccrfmq::write_colormap_ppm(out, spec, resolution);
  } else {
    sccrfmq::write_colormap_csv(out, spec, resolution);
  }
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SCC-rFMQ learning benchmarks for cooperative continuous-"
               "action Markov games"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run a seeded experiment");
  std::string game, algo, out_dir, config_path, init;
  std::string agents, episodes, runs, seed, samples, threads;
  std::vector<std::string> params;
  bool snapshot = false;
  run->add_option("--game", game, "cg|pscg|boat|custom-grid");
  run->add_option("--algo", algo,
                  "algorithm per agent, comma separated "
                  "(scc_rfmq|rfmq|smc|smc_rfmq|cala)");
  run->add_option("--agents", agents, "1 or 2 (1 = single-controller smc)");
  run->add_option("--episodes", episodes, "episodes per run");
  run->add_option("--runs", runs, "independent seeded runs");
  run->add_option("--seed", seed, "base seed");
  run->add_option("--samples", samples, "sample-set size per agent");
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--init", init, "initial sample set: even|random");
  run->add_option("--threads", threads, "worker threads across runs");
  run->add_option("--config", config_path, "key=value config file");
  run->add_option("--param", params, "hyperparameter override key=value");
  run->add_flag("--snapshot", snapshot, "dump run-0 learner state as JSON");

  // colormap
  auto* colormap = app.add_subcommand("colormap", "Dump the payoff surface");
  std::string cm_game = "cg", cm_out = "colormap.csv";
  int cm_resolution = 256;
  colormap->add_option("--game", cm_game, "cg|pscg");
  colormap->add_option("--resolution", cm_resolution, "grid resolution")
      ->check(CLI::Range(2, 4096));
  colormap->add_option("--out", cm_out, ".csv or .ppm output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      std::map<std::string, std::string> kv;
      if (!config_path.empty()) kv = sccrfmq::read_config_file(config_path);
      if (!game.empty()) put(kv, "game", game);
      if (!algo.empty()) put(kv, "algo", algo);
      if (!agents.empty()) put(kv, "agents", agents);
      if (!episodes.empty()) put(kv, "episodes", episodes);
      if (!runs.empty()) put(kv, "runs", runs);
      if (!seed.empty()) put(kv, "seed", seed);
      if (!samples.empty()) put(kv, "samples", samples);
      if (!out_dir.empty()) put(kv, "out", out_dir);
      if (!init.empty()) put(kv, "init", init);
      if (!threads.empty()) put(kv, "threads", threads);
      if (snapshot) put(kv, "snapshot", "true");
      for (const std::string& p : params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos) {
          throw ConfigError("--param expects key=value, got '" + p + "'");
        }
        put(kv, p.substr(0, eq), p.substr(eq + 1));
      }
      return cmd_run(kv);
    }
    return cmd_colormap(cm_game, cm_resolution, cm_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
