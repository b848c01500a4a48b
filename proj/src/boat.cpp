#include "sccrfmq/boat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sccrfmq {

namespace {

// Half-open equal-width bins over iv, top edge folded into the last bin.
// Computed as a ratio so that midpoints of symmetric intervals (theta = 0,
// omega = 0) land exactly on the upper bin.
int bin10(double value, Interval iv) {
  const double t = (value - iv.lo) / iv.width();
  const int b = static_cast<int>(std::floor(t * 10.0));
  return std::clamp(b, 0, 9);
}

}  // namespace

BoatState boat_reset() { return BoatState{}; }

double boat_reward(double x, double y) {
  if (x < 50.0 - boat::kGoalEps) return 0.0;
  if (y > 25.0 && y <= 35.0) return 15.0 - 3.0 * std::abs(y - 30.0);
  if (y > 40.0 && y <= 60.0) return 10.0 - std::abs(y - 50.0);
  if (y > 60.0 && y <= 100.0) return 10.0 - std::abs(y - 80.0) / 2.0;
  return 0.0;
}

StateId boat_state_index(const BoatState& s) {
  const int xb = std::clamp(static_cast<int>(std::floor(s.x)), 0, 49);
  const int yb = std::clamp(static_cast<int>(std::floor(s.y)), 0, 99);
  const int tb = bin10(s.theta, boat::kTheta);
  const int vb = bin10(s.v, boat::kV);
  const int wb = bin10(s.omega, boat::kOmega);
  return static_cast<StateId>(
      (((xb * 100 + yb) * 10 + tb) * 10 + vb) * 10 + wb);
}

std::pair<BoatState, Transition> boat_step_with_current(
    const BoatState& s, double accel_v, double accel_omega,
    double current_force, long step_cap) {
  if (!boat::kAccelV.contains(accel_v) ||
      !boat::kAccelOmega.contains(accel_omega)) {
    throw std::invalid_argument("boat_step: acceleration out of range");
  }
  const double ratio = s.x / 50.0;
  const double drift = current_force * (ratio - ratio * ratio);

  BoatState n;
  n.x = project(s.x + s.v * std::cos(s.theta), boat::kX);
  n.y = project(s.y + s.v * std::sin(s.theta) + drift, boat::kY);
  n.theta = project(s.theta + s.omega, boat::kTheta);
  n.v = project(s.v + accel_v, boat::kV);
  n.omega = project(s.omega + accel_omega, boat::kOmega);
  n.steps = s.steps + 1;

  const bool terminal = n.x >= 50.0 - boat::kGoalEps || n.y <= 0.0 ||
                        n.y >= 100.0 || n.steps >= step_cap;
  const double reward =
      terminal ? boat_reward(n.x, n.y) - 0.1 * static_cast<double>(n.steps)
               : 0.0;
  return {n, Transition{boat_state_index(n), reward, terminal}};
}

std::pair<BoatState, Transition> boat_step(const BoatState& s, double accel_v,
                                           double accel_omega,
                                           RandomSource& rng, long step_cap) {
  return boat_step_with_current(s, accel_v, accel_omega, rng.normal(4.0, 1.0),
                                step_cap);
}

}  // namespace sccrfmq
