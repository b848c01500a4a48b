#include "sccrfmq/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <utility>

#include "sccrfmq/cala.hpp"
#include "sccrfmq/rfmq.hpp"
#include "sccrfmq/scc_rfmq.hpp"
#include "sccrfmq/smc.hpp"
#include "sccrfmq/smc_rfmq.hpp"

namespace sccrfmq {

std::vector<double> cumulative_average(std::span<const double> rewards) {
  if (rewards.empty()) {
    throw std::invalid_argument("cumulative_average: empty series");
  }
  std::vector<double> out(rewards.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < rewards.size(); ++k) {
    sum += rewards[k];
    out[k] = sum / static_cast<double>(k + 1);
  }
  return out;
}

double MetricSeries::final_cumulative_avg() const {
  if (rewards.empty()) {
    throw std::invalid_argument("final_cumulative_avg: empty series");
  }
  double sum = 0.0;
  for (double r : rewards) sum += r;
  return sum / static_cast<double>(rewards.size());
}

double MetricSeries::trailing_mean(int window) const {
  if (rewards.empty()) {
    throw std::invalid_argument("trailing_mean: empty series");
  }
  const std::size_t count =
      std::min(rewards.size(), static_cast<std::size_t>(std::max(window, 1)));
  double sum = 0.0;
  for (std::size_t i = rewards.size() - count; i < rewards.size(); ++i) {
    sum += rewards[i];
  }
  return sum / static_cast<double>(count);
}

std::unique_ptr<Env> make_env(const ExperimentConfig& cfg) {
  if (cfg.game == GameKind::kBoat) {
    return std::make_unique<BoatEnv>(cfg.step_cap);
  }
  return std::make_unique<MatrixEnv>(matrix_spec_of(cfg));
}

std::unique_ptr<Learner> make_learner(const ExperimentConfig& cfg, int agent,
                                      RandomSource rng) {
  const int n = cfg.samples[agent];
  const HyperParams& p = cfg.params[agent];
  switch (cfg.algos[agent]) {
    case AlgoKind::kSccRfmq:
      return std::make_unique<SccRfmqLearner>(n, p, cfg.init, std::move(rng));
    case AlgoKind::kRfmq:
      return std::make_unique<RfmqLearner>(n, p, std::move(rng));
    case AlgoKind::kSmc:
      return std::make_unique<SmcLearner>(n, cfg.agents == 1 ? 2 : 1, p,
                                          cfg.init, std::move(rng));
    case AlgoKind::kSmcRfmq:
      return std::make_unique<SmcRfmqLearner>(n, p, cfg.init, std::move(rng));
    case AlgoKind::kCala:
      break;
  }
  throw ConfigError("cala agents are driven by the runner directly");
}

namespace {

std::string run_label(int run, const std::string& role) {
  return "run" + std::to_string(run) + "/" + role;
}

// Paired-evaluation protocol for CALA agents: each round evaluates the drawn
// joint action and the joint mean action in the same stateless game.
MetricSeries run_cala(const ExperimentConfig& cfg, int run,
                      std::vector<std::string>* snapshots) {
  MatrixEnv env(matrix_spec_of(cfg));
  RandomSource env_rng(cfg.seed, run_label(run, "env"));
  std::vector<CalaPolicy> agents;
  for (int i = 0; i < cfg.agents; ++i) {
    agents.emplace_back(cfg.params[i],
                        RandomSource(cfg.seed, run_label(run, "agent" +
                                                                  std::to_string(i))));
  }
  MetricSeries series;
  series.rewards.reserve(cfg.episodes);
  for (long episode = 0; episode < cfg.episodes; ++episode) {
    double x0 = agents[0].sample();
    double x1 = agents[1].sample();
    const double reward_x = env.evaluate(x0, x1, env_rng);
    const double reward_mu =
        env.evaluate(agents[0].mean(), agents[1].mean(), env_rng);
    agents[0].update(x0, reward_x, reward_mu);
    agents[1].update(x1, reward_x, reward_mu);
    series.rewards.push_back(reward_x);
  }
  if (snapshots) {
    for (const CalaPolicy& agent : agents) {
      snapshots->push_back(agent.snapshot_json());
    }
  }
  return series;
}

}  // namespace

MetricSeries run_single(const ExperimentConfig& cfg, int run,
                        std::vector<std::string>* snapshots) {
  if (cfg.algos[0] == AlgoKind::kCala) return run_cala(cfg, run, snapshots);

  std::unique_ptr<Env> env = make_env(cfg);
  RandomSource env_rng(cfg.seed, run_label(run, "env"));
  std::vector<std::unique_ptr<Learner>> agents;
  agents.reserve(cfg.agents);
  for (int i = 0; i < cfg.agents; ++i) {
    agents.push_back(make_learner(
        cfg, i,
        RandomSource(cfg.seed, run_label(run, "agent" + std::to_string(i)))));
  }

  const int controllers = env->controllers();
  std::vector<double> actions(controllers, 0.0);
  std::vector<int> picks(cfg.agents, 0);

  MetricSeries series;
  series.rewards.reserve(cfg.episodes);
  for (long episode = 0; episode < cfg.episodes; ++episode) {
    for (auto& agent : agents) agent->begin_episode(episode);
    StateId state = env->reset();
    double total = 0.0;
    for (;;) {
      int slot = 0;
      for (int i = 0; i < cfg.agents; ++i) {
        picks[i] = agents[i]->select(state);
        for (int d = 0; d < agents[i]->action_dims(); ++d) {
          actions[slot++] = agents[i]->action(state, picks[i], d);
        }
      }
      const Transition tr = env->step(actions, env_rng);
      total += tr.reward;
      for (int i = 0; i < cfg.agents; ++i) {
        agents[i]->observe(state, picks[i], tr.reward, tr.next, tr.terminal);
      }
      if (tr.terminal) break;
      state = tr.next;
    }
    series.rewards.push_back(total);
  }
  if (snapshots) {
    for (const auto& agent : agents) {
      snapshots->push_back(agent->snapshot_json());
    }
  }
  return series;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  ExperimentResult result;
  result.runs.resize(cfg.runs);
  const int workers = std::max(1, std::min(cfg.threads, cfg.runs));
  if (workers == 1) {
    for (int r = 0; r < cfg.runs; ++r) result.runs[r] = run_single(cfg, r);
    return result;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&cfg, &result, &next] {
      for (;;) {
        const int r = next.fetch_add(1);
        if (r >= cfg.runs) break;
        result.runs[r] = run_single(cfg, r);
      }
    });
  }
  for (std::thread& t : pool) t.join();
  return result;
}

}  // namespace sccrfmq
