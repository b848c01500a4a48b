#ifndef SCCRFMQ_LEARNER_HPP
#define SCCRFMQ_LEARNER_HPP

#include <string>
#include <vector>

#include "sccrfmq/core.hpp"

namespace sccrfmq {

// How a fresh sample set is drawn.
enum class InitMode {
  kEvenlySpaced,   // {i/(n+1) | i = 1..n}; grid product for 2-d actions
  kUniformRandom,  // n independent U[0,1] draws per dimension
};

// Learning constants shared across the learner family. Defaults are the
// benchmark settings; game-dependent fields (gamma, tau, resample threshold)
// get resolved by the experiment config.
struct HyperParams {
  double alpha = 0.5;     // Q learning rate
  double alpha_f = 0.01;  // frequency learning rate
  double gamma = 1.0;     // discount
  int resample_period = 200;
  double sigma0 = 0.33;       // initial exploratory rate
  double delta_d = 0.5;       // sigma decay on a win
  double delta_l = 1.1;       // sigma growth on a loss
  double delta_eps_re = 0.5;  // random-resample mixture decay
  double eta = 1e-9;          // tolerance for the Qmax-equality branch

  // SMC family.
  double smc_resample_threshold = 0.9;  // resample when max weight exceeds
  double tau0 = 25.0;                   // Boltzmann temperature start
  long tau_period = 5000;               // rounds per temperature decay step
  double tau_factor = 0.9;
  double kernel_floor = 0.01;  // minimum resampling kernel bandwidth

  // CALA.
  double cala_lambda = 0.05;
  double cala_sigma_lower = 1e-5;
  double cala_penalty = 1.0;

  void validate() const;  // throws std::invalid_argument
};

// Per-sample learner statistics: plain Q, best seen target Qmax, the
// recurrence frequency F of that best target, and the interpolated
// evaluation E = (1-F)Q + F*Qmax.
struct SampleStats {
  double action = 0.0;
  double q = 0.0;
  double q_max = 0.0;
  double freq = 1.0;
  double eval = 0.0;
};

// One frequency-maximum update of a sample against target u:
//   Q    <- (1-alpha)Q + alpha*u
//   u > Qmax   =>  Qmax <- u, F <- 1
//   u == Qmax  =>  F <- (1-alpha_f)F + alpha_f   (within tolerance eta)
//   u < Qmax   =>  F <- (1-alpha_f)F
//   E    <- (1-F)Q + F*Qmax
void fmq_update(SampleStats& s, double u, const HyperParams& p);

// Exploration probability after k evaluation rounds: 10/(10+k).
inline double epsilon_schedule(long k) {
  return 10.0 / (10.0 + static_cast<double>(k));
}

// {i/(n+1) | i = 1..n}. Deliberately excludes both endpoints.
std::vector<double> evenly_spaced_actions(int n);

// Common surface the experiment runner drives. An agent controls
// action_dims() of the environment's input vector; all action components
// live in [0,1].
class Learner {
 public:
  virtual ~Learner() = default;

  virtual int action_dims() const { return 1; }

  // Global episode clock, for schedules that decay with learning rounds.
  virtual void begin_episode(long /*episode*/) {}

  // Pick a sample index for state s (lazily creating its sample set).
  virtual int select(StateId s) = 0;

  // Component dim of sample index's action at state s.
  virtual double action(StateId s, int index, int dim) const = 0;

  // Digest the observed transition for the previously selected sample.
  virtual void observe(StateId s, int index, double reward, StateId next,
                       bool terminal) = 0;

  // Full learner state as a JSON document (debugging / test fixtures).
  virtual std::string snapshot_json() const = 0;
};

}  // namespace sccrfmq

#endif  // SCCRFMQ_LEARNER_HPP
