#ifndef SCCRFMQ_ENV_HPP
#define SCCRFMQ_ENV_HPP

#include <span>

#include "sccrfmq/boat.hpp"
#include "sccrfmq/core.hpp"
#include "sccrfmq/matrix_game.hpp"
#include "sccrfmq/random.hpp"

namespace sccrfmq {

// Cooperative Markov game behind a single stepping interface. Controllers
// receive normalized inputs in [0,1]; environments with other native ranges
// rescale internally.
class Env {
 public:
  virtual ~Env() = default;
  virtual int controllers() const = 0;
  virtual StateId reset() = 0;
  virtual Transition step(std::span<const double> unit_actions,
                          RandomSource& rng) = 0;
};

// One-shot matrix game: single state, terminal after every joint action.
class MatrixEnv : public Env {
 public:
  explicit MatrixEnv(MatrixGameSpec spec) : spec_(std::move(spec)) {}

  int controllers() const override { return 2; }
  StateId reset() override { return 0; }
  Transition step(std::span<const double> unit_actions,
                  RandomSource& rng) override;

  // Reward of a joint action; used by learners that probe counterfactual
  // actions within a round.
  double evaluate(double a1, double a2, RandomSource& rng) const {
    return matrix_game_step(spec_, a1, a2, rng).reward;
  }

  const MatrixGameSpec& spec() const { return spec_; }

 private:
  MatrixGameSpec spec_;
};

// Boat crossing: controller 0 maps [0,1] onto forward acceleration [-1,2],
// controller 1 onto angular acceleration [-1,1].
class BoatEnv : public Env {
 public:
  explicit BoatEnv(long step_cap = boat::kDefaultStepCap)
      : step_cap_(step_cap) {}

  int controllers() const override { return 2; }
  StateId reset() override;
  Transition step(std::span<const double> unit_actions,
                  RandomSource& rng) override;

  const BoatState& state() const { return state_; }

 private:
  long step_cap_;
  BoatState state_;
};

}  // namespace sccrfmq

#endif  // SCCRFMQ_ENV_HPP
