#include "sccrfmq/smc_rfmq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "sccrfmq/smc.hpp"

namespace sccrfmq {

SmcRfmqLearner::SmcRfmqLearner(int n, const HyperParams& params, InitMode init,
                               RandomSource rng)
    : n_(n), p_(params), init_(init), rng_(std::move(rng)) {
  if (n_ < 2) throw std::invalid_argument("smc_rfmq: need at least two samples");
  p_.validate();
}

SmcRfmqStateData& SmcRfmqLearner::touch(StateId s) {
  auto [it, inserted] = states_.try_emplace(s);
  if (inserted) {
    SmcRfmqStateData& st = it->second;
    st.samples.reserve(n_);
    if (init_ == InitMode::kEvenlySpaced) {
      for (double a : evenly_spaced_actions(n_)) {
        st.samples.push_back(SampleStats{a});
      }
    } else {
      for (int i = 0; i < n_; ++i) {
        st.samples.push_back(SampleStats{rng_.uniform()});
      }
    }
    st.w.assign(n_, 1.0 / n_);
  }
  return it->second;
}

int SmcRfmqLearner::select(StateId s) {
  SmcRfmqStateData& st = touch(s);
  if (st.visits >= p_.resample_period) resample(st);
  if (rng_.bernoulli(epsilon_schedule(st.visits))) {
    return static_cast<int>(rng_.uniform_index(st.samples.size()));
  }
  int best = 0;
  for (int i = 1; i < n_; ++i) {
    if (st.samples[i].eval > st.samples[best].eval) best = i;
  }
  return best;
}

double SmcRfmqLearner::action(StateId s, int index, int dim) const {
  if (dim != 0) throw std::invalid_argument("smc_rfmq: scalar actions only");
  return states_.at(s).samples.at(index).action;
}

double SmcRfmqLearner::max_q(StateId s) const {
  const auto it = states_.find(s);
  if (it == states_.end()) return 0.0;
  double m = it->second.samples[0].q;
  for (const SampleStats& smp : it->second.samples) m = std::max(m, smp.q);
  return m;
}

void SmcRfmqLearner::observe(StateId s, int index, double reward, StateId next,
                             bool terminal) {
  if (!std::isfinite(reward)) {
    throw std::invalid_argument("smc_rfmq: non-finite reward");
  }
  auto it = states_.find(s);
  if (it == states_.end() || index < 0 || index >= n_) {
    throw std::invalid_argument("smc_rfmq: observe on unknown state/sample");
  }
  SmcRfmqStateData& st = it->second;
  const double u = terminal ? reward : reward + p_.gamma * max_q(next);
  const double q_before = st.samples[index].q;
  fmq_update(st.samples[index], u, p_);

  std::vector<double> delta_q(n_, 0.0);
  delta_q[index] = st.samples[index].q - q_before;
  st.w = boltzmann_weights(delta_q, smc_temperature(episode_, p_));
  ++st.visits;
}

void SmcRfmqLearner::resample(SmcRfmqStateData& st) {
  std::vector<double> actions(n_);
  for (int i = 0; i < n_; ++i) actions[i] = st.samples[i].action;
  const std::vector<double> h = smc_kernel_bandwidths(actions, st.w, 1, p_);
  std::vector<SampleStats> next;
  next.reserve(n_);
  for (int i = 0; i < n_; ++i) {
    const int parent = categorical(st.w, rng_);
    next.push_back(SampleStats{
        project(actions[parent] + rng_.normal(0.0, h[0]), kUnitInterval)});
  }
  st.samples = std::move(next);
  st.w.assign(n_, 1.0 / n_);
  st.visits = 0;
}

std::string SmcRfmqLearner::snapshot_json() const {
  nlohmann::json doc;
  doc["algo"] = "smc_rfmq";
  doc["samples_per_state"] = n_;
  std::vector<StateId> ids;
  ids.reserve(states_.size());
  for (const auto& [id, st] : states_) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  nlohmann::json states = nlohmann::json::array();
  for (StateId id : ids) {
    const SmcRfmqStateData& st = states_.at(id);
    nlohmann::json samples = nlohmann::json::array();
    for (const SampleStats& smp : st.samples) {
      samples.push_back({{"action", smp.action},
                         {"q", smp.q},
                         {"q_max", smp.q_max},
                         {"f", smp.freq},
                         {"e", smp.eval}});
    }
    states.push_back({{"state", id},
                      {"visits", st.visits},
                      {"weights", st.w},
                      {"samples", std::move(samples)}});
  }
  doc["states"] = std::move(states);
  return doc.dump();
}

}  // namespace sccrfmq
