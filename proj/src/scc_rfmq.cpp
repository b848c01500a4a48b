#include "sccrfmq/scc_rfmq.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace sccrfmq {

double wolm_sigma(bool best_changed, double q_best, double best_value,
                  double sigma, const HyperParams& p) {
  if (best_changed) return p.sigma0;
  if (q_best >= best_value) return sigma * p.delta_d;
  return std::min(sigma * p.delta_l, p.sigma0);
}

SccRfmqLearner::SccRfmqLearner(int n, const HyperParams& params, InitMode init,
                               RandomSource rng)
    : n_(n), p_(params), init_(init), rng_(std::move(rng)) {
  if (n_ < 3) {
    throw std::invalid_argument(
        "scc_rfmq: sample count must be at least 3 (top-n/3 retention)");
  }
  p_.validate();
}

SccStateData& SccRfmqLearner::touch(StateId s) {
  auto [it, inserted] = states_.try_emplace(s);
  if (inserted) {
    SccStateData& st = it->second;
    st.sigma = p_.sigma0;
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
  }
  return it->second;
}

int SccRfmqLearner::select(StateId s) {
  SccStateData& st = touch(s);
  if (st.visits >= p_.resample_period) coordination_resample(st);
  if (st.pending_reset) {
    for (SampleStats& smp : st.samples) {
      smp.freq = 1.0;
      smp.q_max = 0.0;
      smp.eval = 0.0;
    }
    st.pending_reset = false;
  }
  if (rng_.bernoulli(epsilon_schedule(st.visits))) {
    return static_cast<int>(rng_.uniform_index(st.samples.size()));
  }
  int best = 0;
  for (int i = 1; i < n_; ++i) {
    if (st.samples[i].eval > st.samples[best].eval) best = i;
  }
  return best;
}

double SccRfmqLearner::action(StateId s, int index, int dim) const {
  if (dim != 0) throw std::invalid_argument("scc_rfmq: scalar actions only");
  return states_.at(s).samples.at(index).action;
}

double SccRfmqLearner::max_q(StateId s) const {
  const auto it = states_.find(s);
  if (it == states_.end()) return 0.0;  // unvisited states hold all-zero Q
  double m = it->second.samples[0].q;
  for (const SampleStats& smp : it->second.samples) m = std::max(m, smp.q);
  return m;
}

void SccRfmqLearner::observe(StateId s, int index, double reward, StateId next,
                             bool terminal) {
  if (!std::isfinite(reward)) {
    throw std::invalid_argument("scc_rfmq: non-finite reward");
  }
  const auto it = states_.find(s);
  if (it == states_.end() || index < 0 || index >= n_) {
    throw std::invalid_argument("scc_rfmq: observe on unknown state/sample");
  }
  const double u =
      terminal ? reward : reward + p_.gamma * max_q(next);
  fmq_update(it->second.samples[index], u, p_);
  ++it->second.visits;
}

void SccRfmqLearner::coordination_resample(SccStateData& st) {
  // Best action by plain Q, ties toward the lowest index.
  int a_max = 0;
  for (int i = 1; i < n_; ++i) {
    if (st.samples[i].q > st.samples[a_max].q) a_max = i;
  }
  const double q_best = st.samples[a_max].q;
  const bool changed =
      !st.has_best || st.samples[a_max].action != st.best_action;
  st.sigma = wolm_sigma(changed, q_best, st.best_value, st.sigma, p_);
  st.best_action = st.samples[a_max].action;
  st.best_value = q_best;
  st.has_best = true;

  // Keep the floor(n/3) samples with the largest Q, in their original order.
  const int keep = n_ / 3;
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return st.samples[a].q > st.samples[b].q;
  });
  order.resize(keep);
  std::sort(order.begin(), order.end());

  std::vector<SampleStats> next;
  next.reserve(n_);
  for (int i : order) next.push_back(st.samples[i]);
  while (static_cast<int>(next.size()) < n_) {
    const double a = rng_.bernoulli(st.eps_re)
                         ? rng_.uniform()
                         : project(rng_.normal(st.best_action, st.sigma),
                                   kUnitInterval);
    next.push_back(SampleStats{a});
  }
  st.samples = std::move(next);
  st.eps_re *= p_.delta_eps_re;

  for (SampleStats& smp : st.samples) smp.q = 0.0;
  st.pending_reset = true;  // F/Qmax/E reset at the next evaluation round
  st.visits = 0;
  ++st.resamples;
}

double SccRfmqLearner::greedy_action(StateId s) const {
  const SccStateData& st = states_.at(s);
  int best = 0;
  for (int i = 1; i < n_; ++i) {
    if (st.samples[i].eval > st.samples[best].eval) best = i;
  }
  return st.samples[best].action;
}

std::string SccRfmqLearner::snapshot_json() const {
  nlohmann::json doc;
  doc["algo"] = "scc_rfmq";
  doc["samples_per_state"] = n_;
  std::vector<StateId> ids;
  ids.reserve(states_.size());
  for (const auto& [id, st] : states_) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  nlohmann::json states = nlohmann::json::array();
  for (StateId id : ids) {
    const SccStateData& st = states_.at(id);
    nlohmann::json entry;
    entry["state"] = id;
    entry["sigma"] = st.sigma;
    entry["eps_re"] = st.eps_re;
    entry["visits"] = st.visits;
    entry["resamples"] = st.resamples;
    if (st.has_best) {
      entry["best_action"] = st.best_action;
      entry["best_value"] = st.best_value;
    } else {
      entry["best_action"] = nullptr;
    }
    nlohmann::json samples = nlohmann::json::array();
    for (const SampleStats& smp : st.samples) {
      samples.push_back({{"action", smp.action},
                         {"q", smp.q},
                         {"q_max", smp.q_max},
                         {"f", smp.freq},
                         {"e", smp.eval}});
    }
    entry["samples"] = std::move(samples);
    states.push_back(std::move(entry));
  }
  doc["states"] = std::move(states);
  return doc.dump();
}

}  // namespace sccrfmq
