#ifndef SCCRFMQ_EXPERIMENT_HPP
#define SCCRFMQ_EXPERIMENT_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sccrfmq/config.hpp"
#include "sccrfmq/env.hpp"
#include "sccrfmq/learner.hpp"

namespace sccrfmq {

// Running mean: out[k] = mean of the first k+1 entries.
std::vector<double> cumulative_average(std::span<const double> rewards);

// Per-run reward log.
struct MetricSeries {
  std::vector<double> rewards;

  std::vector<double> cumulative_avg() const {
    return cumulative_average(rewards);
  }
  double final_cumulative_avg() const;
  // Mean of the trailing `window` rewards (whole series when shorter).
  double trailing_mean(int window) const;
};

struct ExperimentResult {
  std::vector<MetricSeries> runs;
};

std::unique_ptr<Env> make_env(const ExperimentConfig& config);

// Learner for one agent slot of the config (cala is handled by the runner
// directly and is not constructible here).
std::unique_ptr<Learner> make_learner(const ExperimentConfig& config,
                                      int agent, RandomSource rng);

// One seeded run. Run r draws every stream from (config.seed, run r) labels,
// so results do not depend on which worker executes the run. Pass `snapshots`
// to capture each agent's final state dump.
MetricSeries run_single(const ExperimentConfig& config, int run,
                        std::vector<std::string>* snapshots = nullptr);

// All runs, fanned out over config.threads workers; results are ordered by
// run index and identical for any worker count.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace sccrfmq

#endif  // SCCRFMQ_EXPERIMENT_HPP
