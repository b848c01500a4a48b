#ifndef SCCRFMQ_RFMQ_HPP
#define SCCRFMQ_RFMQ_HPP

#include <unordered_map>
#include <vector>

#include "sccrfmq/learner.hpp"
#include "sccrfmq/random.hpp"

namespace sccrfmq {

// Recursive frequency-maximum Q-learning over a fixed discrete action set.
// Evaluates actions by E = (1-F)Q + F*Qmax and picks epsilon-greedily on E
// with epsilon = 10/(10+t), t the global round counter. The update target is
// the immediate reward (one-shot evaluation; no bootstrapping).
class RfmqLearner : public Learner {
 public:
  // Default action set {i/(n+1)}.
  RfmqLearner(int n, const HyperParams& params, RandomSource rng);
  // Explicit action set, e.g. the three matrix-game nodes {0, 0.5, 1}.
  RfmqLearner(std::vector<double> actions, const HyperParams& params,
              RandomSource rng);

  int select(StateId s) override;
  double action(StateId s, int index, int dim) const override;
  void observe(StateId s, int index, double reward, StateId next,
               bool terminal) override;
  std::string snapshot_json() const override;

  const std::vector<double>& actions() const { return actions_; }
  long rounds() const { return rounds_; }
  const std::vector<SampleStats>& state_stats(StateId s) const {
    return states_.at(s);
  }
  int greedy_index(StateId s) const;

 private:
  std::vector<SampleStats>& touch(StateId s);

  std::vector<double> actions_;
  HyperParams p_;
  RandomSource rng_;
  long rounds_ = 0;
  std::unordered_map<StateId, std::vector<SampleStats>> states_;
};

}  // namespace sccrfmq

#endif  // SCCRFMQ_RFMQ_HPP
