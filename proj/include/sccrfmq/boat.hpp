#ifndef SCCRFMQ_BOAT_HPP
#define SCCRFMQ_BOAT_HPP

#include <utility>

#include "sccrfmq/core.hpp"
#include "sccrfmq/random.hpp"

namespace sccrfmq {

namespace boat {

inline constexpr Interval kX{0.0, 50.0};
inline constexpr Interval kY{0.0, 100.0};
inline constexpr Interval kTheta{-kPi / 3.0, kPi / 3.0};
inline constexpr Interval kV{2.0, 5.0};
inline constexpr Interval kOmega{-1.0, 1.0};

// Controller ranges: forward acceleration and angular acceleration.
inline constexpr Interval kAccelV{-1.0, 2.0};
inline constexpr Interval kAccelOmega{-1.0, 1.0};

inline constexpr long kDefaultStepCap = 200;
inline constexpr long kStateCount = 5'000'000;

// x counts as "reached the right bank" once projection has pinned it to 50;
// the tolerance only guards float noise.
inline constexpr double kGoalEps = 1e-9;

}  // namespace boat

// Boat pose and motion: bow coordinates, heading, speed, angular speed, plus
// the step count of the current trial. All fields stay inside their intervals
// after every transition (enforced by projection).
struct BoatState {
  double x = 0.0;
  double y = 50.0;
  double theta = 0.0;
  double v = 2.0;
  double omega = 0.0;
  long steps = 0;
};

// Start of every trial: bow at the left quay center, pointing straight
// across, slowest speed, no rotation.
BoatState boat_reset();

// Quay reward at the landing point. Nonzero only on the right bank (x = 50):
// a narrow quay peaking at 15 around y = 30 and two wider quays peaking at
// 10 around y = 50 and y = 80.
double boat_reward(double x, double y);

// Bijective discretization: 50 x-bins, 100 y-bins, 10 bins each for theta, v
// and omega (half-open bins, top edge folded into the last bin).
StateId boat_state_index(const BoatState& s);

// One unit-time step with the current force fixed (deterministic core of
// boat_step). The drift from the river current is current_force *
// (x/50 - (x/50)^2), strongest mid-river and zero at both banks. Position
// and heading integrate forward-Euler from time-t values; speed and angular
// speed then absorb the accelerations. Terminal on reaching the right bank,
// drifting out top/bottom, or exhausting the step cap; the terminal reward
// is the quay reward minus 0.1 per step taken.
std::pair<BoatState, Transition> boat_step_with_current(
    const BoatState& s, double accel_v, double accel_omega,
    double current_force, long step_cap = boat::kDefaultStepCap);

// One step with the current force drawn from N(4, 1).
std::pair<BoatState, Transition> boat_step(
    const BoatState& s, double accel_v, double accel_omega, RandomSource& rng,
    long step_cap = boat::kDefaultStepCap);

}  // namespace sccrfmq

#endif  // SCCRFMQ_BOAT_HPP
