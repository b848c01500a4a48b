#include "sccrfmq/rfmq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace sccrfmq {

RfmqLearner::RfmqLearner(int n, const HyperParams& params, RandomSource rng)
    : RfmqLearner(evenly_spaced_actions(n), params, std::move(rng)) {}

RfmqLearner::RfmqLearner(std::vector<double> actions,
                         const HyperParams& params, RandomSource rng)
    : actions_(std::move(actions)), p_(params), rng_(std::move(rng)) {
  if (actions_.empty()) {
    throw std::invalid_argument("rfmq: action set must be nonempty");
  }
  for (double a : actions_) {
    if (!kUnitInterval.contains(a)) {
      throw std::invalid_argument("rfmq: actions must lie in [0,1]");
    }
  }
  p_.validate();
}

std::vector<SampleStats>& RfmqLearner::touch(StateId s) {
  auto [it, inserted] = states_.try_emplace(s);
  if (inserted) {
    it->second.reserve(actions_.size());
    for (double a : actions_) it->second.push_back(SampleStats{a});
  }
  return it->second;
}

int RfmqLearner::select(StateId s) {
  const std::vector<SampleStats>& stats = touch(s);
  if (rng_.bernoulli(epsilon_schedule(rounds_))) {
    return static_cast<int>(rng_.uniform_index(stats.size()));
  }
  int best = 0;
  for (std::size_t i = 1; i < stats.size(); ++i) {
    if (stats[i].eval > stats[best].eval) best = static_cast<int>(i);
  }
  return best;
}

double RfmqLearner::action(StateId, int index, int dim) const {
  if (dim != 0) throw std::invalid_argument("rfmq: scalar actions only");
  return actions_.at(index);
}

void RfmqLearner::observe(StateId s, int index, double reward, StateId,
                          bool) {
  if (!std::isfinite(reward)) {
    throw std::invalid_argument("rfmq: non-finite reward");
  }
  auto it = states_.find(s);
  if (it == states_.end() || index < 0 ||
      index >= static_cast<int>(actions_.size())) {
    throw std::invalid_argument("rfmq: observe on unknown state/action");
  }
  fmq_update(it->second[index], reward, p_);
  ++rounds_;
}

int RfmqLearner::greedy_index(StateId s) const {
  const std::vector<SampleStats>& stats = states_.at(s);
  int best = 0;
  for (std::size_t i = 1; i < stats.size(); ++i) {
    if (stats[i].eval > stats[best].eval) best = static_cast<int>(i);
  }
  return best;
}

std::string RfmqLearner::snapshot_json() const {
  nlohmann::json doc;
  doc["algo"] = "rfmq";
  doc["actions"] = actions_;
  doc["rounds"] = rounds_;
  std::vector<StateId> ids;
  ids.reserve(states_.size());
  for (const auto& [id, stats] : states_) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  nlohmann::json states = nlohmann::json::array();
  for (StateId id : ids) {
    nlohmann::json stats = nlohmann::json::array();
    for (const SampleStats& smp : states_.at(id)) {
      stats.push_back({{"action", smp.action},
                       {"q", smp.q},
                       {"q_max", smp.q_max},
                       {"f", smp.freq},
                       {"e", smp.eval}});
    }
    states.push_back({{"state", id}, {"samples", std::move(stats)}});
  }
  doc["states"] = std::move(states);
  return doc.dump();
}

}  // namespace sccrfmq
