#ifndef SCCRFMQ_SCC_RFMQ_HPP
#define SCCRFMQ_SCC_RFMQ_HPP

#include <unordered_map>
#include <vector>

#include "sccrfmq/learner.hpp"
#include "sccrfmq/random.hpp"

namespace sccrfmq {

// New exploratory rate per the WoLM (Win or Learn More) rule: reset to
// sigma0 when the best action changed, shrink by delta_d when its value held
// or improved, otherwise grow by delta_l clamped to sigma0.
double wolm_sigma(bool best_changed, double q_best, double best_value,
                  double sigma, const HyperParams& p);

// Per-state sample set plus coordination-resample bookkeeping.
struct SccStateData {
  std::vector<SampleStats> samples;
  double sigma = 0.33;    // exploratory rate, in (0, sigma0]
  double eps_re = 1.0;    // probability of a uniform redraw at resample
  bool has_best = false;  // false until the first resample
  double best_action = 0.0;
  double best_value = 0.0;
  long visits = 0;  // evaluation rounds since the last resample
  long resamples = 0;
  bool pending_reset = false;  // resampled; stats reset on next round
};

// Two-layer independent learner for continuous-action cooperative games.
// The evaluation layer runs frequency-maximum Q-learning over a finite
// per-state sample set; the modification layer periodically resamples that
// set, keeping the top third by Q and drawing replacements from a mixture of
// a normal around the best action (spread adapted by WoLM) and U[0,1].
class SccRfmqLearner : public Learner {
 public:
  // n >= 3: the resample step retains floor(n/3) samples, which must be at
  // least one.
  SccRfmqLearner(int n, const HyperParams& params, InitMode init,
                 RandomSource rng);

  int select(StateId s) override;
  double action(StateId s, int index, int dim) const override;
  void observe(StateId s, int index, double reward, StateId next,
               bool terminal) override;
  std::string snapshot_json() const override;

  // Action the greedy policy would play at s (argmax of E, ties toward the
  // lowest index).
  double greedy_action(StateId s) const;

  int sample_count() const { return n_; }
  bool has_state(StateId s) const { return states_.contains(s); }
  std::size_t state_count() const { return states_.size(); }
  const SccStateData& state_data(StateId s) const { return states_.at(s); }

 private:
  SccStateData& touch(StateId s);
  void coordination_resample(SccStateData& st);
  double max_q(StateId s) const;

  int n_;
  HyperParams p_;
  InitMode init_;
  RandomSource rng_;
  std::unordered_map<StateId, SccStateData> states_;
};

}  // namespace sccrfmq

#endif  // SCCRFMQ_SCC_RFMQ_HPP
