#include "sccrfmq/env.hpp"

#include <stdexcept>

namespace sccrfmq {

namespace {

void check_unit_actions(std::span<const double> actions, std::size_t expect) {
  if (actions.size() != expect) {
    throw std::invalid_argument("env: wrong number of controller inputs");
  }
  for (double a : actions) {
    if (!kUnitInterval.contains(a)) {
      throw std::invalid_argument("env: controller input outside [0,1]");
    }
  }
}

}  // namespace

Transition MatrixEnv::step(std::span<const double> unit_actions,
                           RandomSource& rng) {
  check_unit_actions(unit_actions, 2);
  return matrix_game_step(spec_, unit_actions[0], unit_actions[1], rng);
}

StateId BoatEnv::reset() {
  state_ = boat_reset();
  return boat_state_index(state_);
}

Transition BoatEnv::step(std::span<const double> unit_actions,
                         RandomSource& rng) {
  check_unit_actions(unit_actions, 2);
  const double accel_v =
      boat::kAccelV.lo + unit_actions[0] * boat::kAccelV.width();
  const double accel_omega =
      boat::kAccelOmega.lo + unit_actions[1] * boat::kAccelOmega.width();
  auto [next, transition] =
      boat_step(state_, accel_v, accel_omega, rng, step_cap_);
  state_ = next;
  return transition;
}

}  // namespace sccrfmq
