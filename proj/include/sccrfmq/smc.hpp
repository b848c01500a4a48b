#ifndef SCCRFMQ_SMC_HPP
#define SCCRFMQ_SMC_HPP

#include <span>
#include <unordered_map>
#include <vector>

#include "sccrfmq/learner.hpp"
#include "sccrfmq/random.hpp"

namespace sccrfmq {

// Sequential Monte-Carlo actor-critic over a per-state sample set.

// Boltzmann probability vector exp(v_i/tau)/sum_j exp(v_j/tau), computed with
// max-subtraction so arbitrarily large values cannot overflow.
std::vector<double> boltzmann_weights(std::span<const double> values,
                                      double tau);

// tau0 * tau_factor^floor(t / tau_period).
double smc_temperature(long t, const HyperParams& p);

// Categorical draw proportional to w. A degenerate (all-zero or non-finite)
// weight vector falls back to a uniform draw.
int categorical(std::span<const double> w, RandomSource& rng);

// Per-dimension kernel bandwidths for resampling: importance-weighted sample
// standard deviation scaled by (4/(3n))^(1/5), floored at kernel_floor.
std::vector<double> smc_kernel_bandwidths(const std::vector<double>& actions,
                                          std::span<const double> w, int dims,
                                          const HyperParams& p);

// Sample set with importance weights and critic values. Actions are stored
// flattened: sample i occupies actions[i*dims .. i*dims+dims).
struct SmcStateData {
  std::vector<double> actions;
  std::vector<double> w;  // probability vector
  std::vector<double> q;
};

// SMC-learning: the actor draws among sampled actions proportionally to
// importance weights, the critic tracks per-sample Q, and weights follow a
// Boltzmann over Q with a decaying temperature. When weight mass concentrates
// past a threshold the set is resampled through a Gaussian kernel around
// weighted parents.
class SmcLearner : public Learner {
 public:
  // dims = 1 for a per-agent scalar controller, 2 for the single-agent
  // variant that drives both boat controllers at once.
  SmcLearner(int n, int dims, const HyperParams& params, InitMode init,
             RandomSource rng);

  int action_dims() const override { return dims_; }
  void begin_episode(long episode) override { episode_ = episode; }
  int select(StateId s) override;
  double action(StateId s, int index, int dim) const override;
  void observe(StateId s, int index, double reward, StateId next,
               bool terminal) override;
  std::string snapshot_json() const override;

  bool has_state(StateId s) const { return states_.contains(s); }
  const SmcStateData& state_data(StateId s) const { return states_.at(s); }
  long resample_count() const { return resamples_; }

 private:
  SmcStateData& touch(StateId s);
  void resample(SmcStateData& st);
  double max_q(StateId s) const;

  int n_;
  int dims_;
  HyperParams p_;
  InitMode init_;
  RandomSource rng_;
  long episode_ = 0;
  long resamples_ = 0;
  std::unordered_map<StateId, SmcStateData> states_;
};

}  // namespace sccrfmq

#endif  // SCCRFMQ_SMC_HPP
