#include <cmath>
#include <set>
#include <tuple>

#include "doctest.h"
#include "sccrfmq/boat.hpp"
#include "sccrfmq/random.hpp"

using namespace sccrfmq;

namespace {

// Independent binning oracle: same half-open ratio rule spelled out
// explicitly per component.
std::tuple<int, int, int, int, int> oracle_bins(const BoatState& s) {
  const auto bin = [](double v, double lo, double hi, int count) {
    int b = static_cast<int>(std::floor((v - lo) / (hi - lo) * count));
    if (b < 0) b = 0;
    if (b >= count) b = count - 1;
    return b;
  };
  return {bin(s.x, 0.0, 50.0, 50), bin(s.y, 0.0, 100.0, 100),
          bin(s.theta, boat::kTheta.lo, boat::kTheta.hi, 10),
          bin(s.v, 2.0, 5.0, 10), bin(s.omega, -1.0, 1.0, 10)};
}

StateId oracle_index(const BoatState& s) {
  const auto [xb, yb, tb, vb, wb] = oracle_bins(s);
  return static_cast<StateId>((((xb * 100 + yb) * 10 + tb) * 10 + vb) * 10 +
                              wb);
}

BoatState random_state(RandomSource& rng) {
  BoatState s;
  s.x = rng.uniform() * 50.0;
  s.y = rng.uniform() * 100.0;
  s.theta = boat::kTheta.lo + rng.uniform() * boat::kTheta.width();
  s.v = 2.0 + rng.uniform() * 3.0;
  s.omega = -1.0 + rng.uniform() * 2.0;
  return s;
}

}  // namespace

TEST_CASE("boat_reset returns the left quay center") {
  const BoatState s = boat_reset();
  CHECK(s.x == 0.0);
  CHECK(s.y == 50.0);
  CHECK(s.theta == 0.0);
  CHECK(s.v == 2.0);
  CHECK(s.omega == 0.0);
  CHECK(s.steps == 0);

  const BoatState t = boat_reset();
  CHECK(boat_state_index(s) == boat_state_index(t));
}

TEST_CASE("initial state lands in the expected discretization cell") {
  // theta = 0 and omega = 0 sit exactly on the midpoint of symmetric
  // intervals; the ratio rule puts them in the upper bin (5).
  const BoatState s = boat_reset();
  const auto [xb, yb, tb, vb, wb] = oracle_bins(s);
  CHECK(xb == 0);
  CHECK(yb == 50);
  CHECK(tb == 5);
  CHECK(vb == 0);
  CHECK(wb == 5);
  CHECK(oracle_index(s) == 50505);
  CHECK(boat_state_index(s) == 50505);
}

TEST_CASE("the all-top-bin state maps to the last id") {
  BoatState s;
  s.x = 50.0;
  s.y = 100.0;
  s.theta = boat::kTheta.hi;
  s.v = 5.0;
  s.omega = 1.0;
  CHECK(boat_state_index(s) == 4999999);
}

TEST_CASE("state ids are consistent with the oracle and injective per cell") {
  RandomSource rng(17, "boat-index");
  std::set<StateId> seen_ids;
  std::set<std::tuple<int, int, int, int, int>> seen_cells;
  for (int i = 0; i < 10000; ++i) {
    const BoatState s = random_state(rng);
    const StateId id = boat_state_index(s);
    REQUIRE(id == oracle_index(s));
    REQUIRE(id < boat::kStateCount);
    seen_ids.insert(id);
    seen_cells.insert(oracle_bins(s));
  }
  // Distinct cells <-> distinct ids.
  CHECK(seen_ids.size() == seen_cells.size());
}

TEST_CASE("boat_reward piecewise map") {
  CHECK(boat_reward(50.0, 30.0) == 15.0);
  CHECK(boat_reward(50.0, 80.0) == 10.0);
  CHECK(boat_reward(50.0, 38.0) == 0.0);
  CHECK(boat_reward(50.0, 50.0) == 10.0);
  CHECK(boat_reward(50.0, 25.0) == 0.0);   // branch is open at 25
  CHECK(boat_reward(50.0, 35.0) == 0.0);   // 15 - 3*5
  CHECK(boat_reward(50.0, 60.0) == 0.0);   // 10 - 10
  CHECK(boat_reward(50.0, 100.0) == 0.0);  // 10 - 20/2
  CHECK(boat_reward(50.0, 45.0) == 5.0);
  CHECK(boat_reward(50.0, 90.0) == 5.0);
  CHECK(boat_reward(49.0, 30.0) == 0.0);  // not at the right bank
}

TEST_CASE("boat_step: no current at the left bank") {
  const BoatState s = boat_reset();
  const auto [n, tr] = boat_step_with_current(s, 1.0, 0.0, 123.456);
  CHECK(n.x == 2.0);
  CHECK(n.y == 50.0);
  CHECK(n.theta == 0.0);
  CHECK(n.v == 3.0);
  CHECK(n.omega == 0.0);
  CHECK(n.steps == 1);
  CHECK_FALSE(tr.terminal);
  CHECK(tr.reward == 0.0);
}

TEST_CASE("boat_step: mid-river current pushes downstream") {
  BoatState s;
  s.x = 25.0;
  s.y = 40.0;
  s.theta = 0.0;
  s.v = 2.0;
  s.omega = 0.0;
  const auto [n, tr] = boat_step_with_current(s, 0.0, 0.0, 4.0);
  CHECK(n.y == doctest::Approx(41.0).epsilon(1e-12));  // 4*(0.5 - 0.25)
  CHECK_FALSE(tr.terminal);
}

TEST_CASE("boat_step: landing at the narrow quay") {
  BoatState s;
  s.x = 48.5;
  s.y = 30.0;
  s.theta = 0.0;
  s.v = 2.0;
  s.omega = 0.0;
  s.steps = 19;
  const auto [n, tr] = boat_step_with_current(s, 0.0, 0.0, 0.0);
  CHECK(n.x == 50.0);
  CHECK(n.steps == 20);
  CHECK(tr.terminal);
  CHECK(tr.reward == doctest::Approx(13.0).epsilon(1e-12));  // 15 - 0.1*20
}

TEST_CASE("boat_step rejects out-of-range accelerations") {
  const BoatState s = boat_reset();
  CHECK_THROWS_AS(boat_step_with_current(s, 2.5, 0.0, 4.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(boat_step_with_current(s, 0.0, -1.5, 4.0),
                  std::invalid_argument);
}

TEST_CASE("the step cap terminates trials that go nowhere") {
  BoatState s = boat_reset();
  Transition tr;
  for (int i = 0; i < 3; ++i) {
    // Max reverse thrust keeps v at its floor; x still advances.
    std::tie(s, tr) = boat_step_with_current(s, -1.0, 0.0, 0.0, 3);
  }
  CHECK(tr.terminal);
  CHECK(s.steps == 3);
  CHECK(tr.reward == doctest::Approx(-0.3).epsilon(1e-12));
}

TEST_CASE("random episodes respect the state invariants and terminate") {
  RandomSource rng(23, "boat-episodes");
  for (int episode = 0; episode < 2000; ++episode) {
    BoatState s = boat_reset();
    Transition tr;
    int steps = 0;
    do {
      const double accel_v =
          boat::kAccelV.lo + rng.uniform() * boat::kAccelV.width();
      const double accel_omega =
          boat::kAccelOmega.lo + rng.uniform() * boat::kAccelOmega.width();
      std::tie(s, tr) = boat_step(s, accel_v, accel_omega, rng);
      REQUIRE(boat::kX.contains(s.x));
      REQUIRE(boat::kY.contains(s.y));
      REQUIRE(boat::kTheta.contains(s.theta));
      REQUIRE(boat::kV.contains(s.v));
      REQUIRE(boat::kOmega.contains(s.omega));
      ++steps;
      REQUIRE(steps <= boat::kDefaultStepCap);
    } while (!tr.terminal);
    // v >= 2 and |theta| <= pi/3 give at least one unit of x progress per
    // step, so episodes end long before the cap.
    CHECK(steps <= 50);
  }
}
