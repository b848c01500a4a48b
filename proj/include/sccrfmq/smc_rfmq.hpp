#ifndef SCCRFMQ_SMC_RFMQ_HPP
#define SCCRFMQ_SMC_RFMQ_HPP

#include <unordered_map>
#include <vector>

#include "sccrfmq/learner.hpp"
#include "sccrfmq/random.hpp"

namespace sccrfmq {

struct SmcRfmqStateData {
  std::vector<SampleStats> samples;
  std::vector<double> w;  // Boltzmann over the latest per-round Q changes
  long visits = 0;
};

// SMC+rFMQ: frequency-maximum Q evaluation over the sample set, combined with
// the plain SMC kernel resampling every c rounds. Resampling parents are
// weighted by a Boltzmann over the per-round Q change of each sample, so the
// set drifts toward recently improving actions without any coordination
// mechanism.
class SmcRfmqLearner : public Learner {
 public:
  SmcRfmqLearner(int n, const HyperParams& params, InitMode init,
                 RandomSource rng);

  void begin_episode(long episode) override { episode_ = episode; }
  int select(StateId s) override;
  double action(StateId s, int index, int dim) const override;
  void observe(StateId s, int index, double reward, StateId next,
               bool terminal) override;
  std::string snapshot_json() const override;

  bool has_state(StateId s) const { return states_.contains(s); }
  const SmcRfmqStateData& state_data(StateId s) const { return states_.at(s); }

 private:
  SmcRfmqStateData& touch(StateId s);
  void resample(SmcRfmqStateData& st);
  double max_q(StateId s) const;

  int n_;
  HyperParams p_;
  InitMode init_;
  RandomSource rng_;
  long episode_ = 0;
  std::unordered_map<StateId, SmcRfmqStateData> states_;
};

}  // namespace sccrfmq

#endif  // SCCRFMQ_SMC_RFMQ_HPP
