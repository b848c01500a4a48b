#include "sccrfmq/smc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace sccrfmq {

std::vector<double> boltzmann_weights(std::span<const double> values,
                                      double tau) {
  if (!(tau > 0.0)) {
    throw std::invalid_argument("boltzmann_weights: temperature must be > 0");
  }
  if (values.empty()) {
    throw std::invalid_argument("boltzmann_weights: empty value list");
  }
  double vmax = values[0];
  for (double v : values) vmax = std::max(vmax, v);
  std::vector<double> w(values.size());
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    w[i] = std::exp((values[i] - vmax) / tau);
    total += w[i];
  }
  for (double& x : w) x /= total;
  return w;
}

double smc_temperature(long t, const HyperParams& p) {
  return p.tau0 * std::pow(p.tau_factor, static_cast<double>(t / p.tau_period));
}

int categorical(std::span<const double> w, RandomSource& rng) {
  double total = 0.0;
  bool ok = true;
  for (double x : w) {
    if (!(x >= 0.0) || !std::isfinite(x)) ok = false;
    total += x;
  }
  if (!ok || !(total > 0.0)) {
    return static_cast<int>(rng.uniform_index(w.size()));
  }
  const double x = rng.uniform() * total;
  double cum = 0.0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    cum += w[i];
    if (x < cum) return static_cast<int>(i);
  }
  return static_cast<int>(w.size() - 1);
}

std::vector<double> smc_kernel_bandwidths(const std::vector<double>& actions,
                                          std::span<const double> w, int dims,
                                          const HyperParams& p) {
  const std::size_t n = w.size();
  const double scale = std::pow(4.0 / (3.0 * static_cast<double>(n)), 0.2);
  std::vector<double> h(dims, p.kernel_floor);
  for (int d = 0; d < dims; ++d) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += w[i] * actions[i * dims + d];
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double delta = actions[i * dims + d] - mean;
      var += w[i] * delta * delta;
    }
    h[d] = std::max(p.kernel_floor, std::sqrt(var) * scale);
  }
  return h;
}

SmcLearner::SmcLearner(int n, int dims, const HyperParams& params,
                       InitMode init, RandomSource rng)
    : n_(n), dims_(dims), p_(params), init_(init), rng_(std::move(rng)) {
  if (n_ < 2) throw std::invalid_argument("smc: need at least two samples");
  if (dims_ != 1 && dims_ != 2) {
    throw std::invalid_argument("smc: supports 1- or 2-dimensional actions");
  }
  if (init_ == InitMode::kEvenlySpaced && dims_ == 2) {
    const int m = static_cast<int>(std::lround(std::sqrt(n_)));
    if (m * m != n_) {
      throw std::invalid_argument(
          "smc: evenly spaced 2-d init needs a square sample count");
    }
  }
  p_.validate();
}

SmcStateData& SmcLearner::touch(StateId s) {
  auto [it, inserted] = states_.try_emplace(s);
  if (inserted) {
    SmcStateData& st = it->second;
    st.actions.reserve(static_cast<std::size_t>(n_) * dims_);
    if (init_ == InitMode::kEvenlySpaced) {
      if (dims_ == 1) {
        st.actions = evenly_spaced_actions(n_);
      } else {
        const int m = static_cast<int>(std::lround(std::sqrt(n_)));
        const std::vector<double> axis = evenly_spaced_actions(m);
        for (double a : axis) {
          for (double b : axis) {
            st.actions.push_back(a);
            st.actions.push_back(b);
          }
        }
      }
    } else {
      for (int i = 0; i < n_ * dims_; ++i) st.actions.push_back(rng_.uniform());
    }
    st.w.assign(n_, 1.0 / n_);
    st.q.assign(n_, 0.0);
  }
  return it->second;
}

int SmcLearner::select(StateId s) {
  SmcStateData& st = touch(s);
  double total = 0.0;
  bool finite = true;
  for (double x : st.w) {
    if (!std::isfinite(x) || x < 0.0) finite = false;
    total += x;
  }
  if (!finite || !(total > 0.0)) {
    std::fprintf(stderr, "smc: degenerate weights at state %u, reset to uniform\n",
                 static_cast<unsigned>(s));
    st.w.assign(n_, 1.0 / n_);
  }
  return categorical(st.w, rng_);
}

double SmcLearner::action(StateId s, int index, int dim) const {
  const SmcStateData& st = states_.at(s);
  return st.actions.at(static_cast<std::size_t>(index) * dims_ + dim);
}

double SmcLearner::max_q(StateId s) const {
  const auto it = states_.find(s);
  if (it == states_.end()) return 0.0;
  double m = it->second.q[0];
  for (double q : it->second.q) m = std::max(m, q);
  return m;
}

void SmcLearner::observe(StateId s, int index, double reward, StateId next,
                         bool terminal) {
  if (!std::isfinite(reward)) {
    throw std::invalid_argument("smc: non-finite reward");
  }
  auto it = states_.find(s);
  if (it == states_.end() || index < 0 || index >= n_) {
    throw std::invalid_argument("smc: observe on unknown state/sample");
  }
  SmcStateData& st = it->second;
  const double u = terminal ? reward : reward + p_.gamma * max_q(next);
  st.q[index] = (1.0 - p_.alpha) * st.q[index] + p_.alpha * u;
  st.w = boltzmann_weights(st.q, smc_temperature(episode_, p_));
  if (*std::max_element(st.w.begin(), st.w.end()) >
      p_.smc_resample_threshold) {
    resample(st);
  }
}

void SmcLearner::resample(SmcStateData& st) {
  const std::vector<double> h = smc_kernel_bandwidths(st.actions, st.w, dims_, p_);
  std::vector<double> children(static_cast<std::size_t>(n_) * dims_);
  for (int i = 0; i < n_; ++i) {
    const int parent = categorical(st.w, rng_);
    for (int d = 0; d < dims_; ++d) {
      children[static_cast<std::size_t>(i) * dims_ + d] =
          project(st.actions[static_cast<std::size_t>(parent) * dims_ + d] +
                      rng_.normal(0.0, h[d]),
                  kUnitInterval);
    }
  }
  st.actions = std::move(children);
  st.w.assign(n_, 1.0 / n_);
  st.q.assign(n_, 0.0);
  ++resamples_;
}

std::string SmcLearner::snapshot_json() const {
  nlohmann::json doc;
  doc["algo"] = "smc";
  doc["samples_per_state"] = n_;
  doc["dims"] = dims_;
  doc["resamples"] = resamples_;
  std::vector<StateId> ids;
  ids.reserve(states_.size());
  for (const auto& [id, st] : states_) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  nlohmann::json states = nlohmann::json::array();
  for (StateId id : ids) {
    const SmcStateData& st = states_.at(id);
    states.push_back({{"state", id},
                      {"actions", st.actions},
                      {"weights", st.w},
                      {"q", st.q}});
  }
  doc["states"] = std::move(states);
  return doc.dump();
}

}  // namespace sccrfmq
