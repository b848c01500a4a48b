#ifndef SCCRFMQ_CALA_HPP
#define SCCRFMQ_CALA_HPP

#include <string>

#include "sccrfmq/learner.hpp"
#include "sccrfmq/random.hpp"

namespace sccrfmq {

// Continuous-action learning automaton: a Gaussian policy N(mu, s) on [0,1]
// whose mean and spread are nudged by the normalized reward difference
// between the exploratory draw x and the mean action mu. Stateless games
// only: each round needs a second evaluation at mu.
class CalaPolicy {
 public:
  CalaPolicy(const HyperParams& params, RandomSource rng);

  // Draw x ~ N(mu, max(s, sigma_lower)) projected to [0,1].
  double sample();

  // Update from the rewards of the played action x and of the mean action.
  // Rewards are normalized to [0,1] through running min/max before use.
  void update(double x, double reward_x, double reward_mu);

  double mean() const { return mu_; }
  double spread() const { return s_; }
  std::string snapshot_json() const;

 private:
  double normalize(double r) const;
  void note(double r);

  HyperParams p_;
  RandomSource rng_;
  double mu_ = 0.5;
  double s_;
  double reward_min_ = 0.0;
  double reward_max_ = 0.0;
  bool seen_reward_ = false;
};

}  // namespace sccrfmq

#endif  // SCCRFMQ_CALA_HPP
