#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "sccrfmq/matrix_game.hpp"
#include "sccrfmq/random.hpp"

using namespace sccrfmq;

namespace {

// Independent oracle: piecewise-linear nodal (hat) basis over {0, 0.5, 1},
// summed over all nine nodes. Algebraically equal to bilinear interpolation
// but computed through a different route.
double hat(double node, double a) {
  const double d = std::abs(a - node) / 0.5;
  return d >= 1.0 ? 0.0 : 1.0 - d;
}

double hat_basis_eval(const Grid3& grid, double a1, double a2) {
  const double nodes[3] = {0.0, 0.5, 1.0};
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      sum += grid[i][j] * hat(nodes[i], a1) * hat(nodes[j], a2);
    }
  }
  return sum;
}

}  // namespace

TEST_CASE("climbing grid hits the published payoffs at all nine nodes") {
  const MatrixGameSpec cg = MatrixGameSpec::climbing();
  const double nodes[3] = {0.0, 0.5, 1.0};
  const double expect[3][3] = {{11, -30, 0}, {-30, 7, 6}, {0, 0, 5}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(bilinear_eval(cg.grid_a, nodes[i], nodes[j]) == expect[i][j]);
    }
  }
}

TEST_CASE("bilinear_eval worked examples") {
  const Grid3& cg = MatrixGameSpec::climbing().grid_a;
  CHECK(bilinear_eval(cg, 0.0, 0.0) == 11.0);
  CHECK(bilinear_eval(cg, 0.25, 0.25) == doctest::Approx(-10.5).epsilon(1e-12));
  CHECK(bilinear_eval(cg, 0.1, 0.0) == doctest::Approx(2.8).epsilon(1e-12));
  CHECK(bilinear_eval(cg, 0.5, 0.5) == 7.0);
  CHECK_THROWS_AS(bilinear_eval(cg, -0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(bilinear_eval(cg, 0.5, 1.1), std::invalid_argument);
}

TEST_CASE("bilinear_eval matches the hat-basis oracle everywhere") {
  const MatrixGameSpec cg = MatrixGameSpec::climbing();
  const MatrixGameSpec pscg = MatrixGameSpec::partially_stochastic();
  const Grid3* grids[3] = {&cg.grid_a, &pscg.grid_a, &pscg.grid_b};
  RandomSource rng(404, "bilinear-oracle");
  for (const Grid3* grid : grids) {
    for (int i = 0; i < 10000; ++i) {
      const double a1 = rng.uniform();
      const double a2 = rng.uniform();
      CHECK(std::abs(bilinear_eval(*grid, a1, a2) -
                     hat_basis_eval(*grid, a1, a2)) < 1e-12);
    }
  }
}

TEST_CASE("bilinear_eval stays within the enclosing corners") {
  const Grid3& cg = MatrixGameSpec::climbing().grid_a;
  RandomSource rng(405, "bilinear-range");
  for (int trial = 0; trial < 5000; ++trial) {
    const double a1 = rng.uniform();
    const double a2 = rng.uniform();
    const int i = a1 < 0.5 ? 0 : 1;
    const int j = a2 < 0.5 ? 0 : 1;
    const double corners[4] = {cg[i][j], cg[i + 1][j], cg[i][j + 1],
                               cg[i + 1][j + 1]};
    const double lo = *std::min_element(corners, corners + 4);
    const double hi = *std::max_element(corners, corners + 4);
    const double v = bilinear_eval(cg, a1, a2);
    CHECK(v >= lo - 1e-12);
    CHECK(v <= hi + 1e-12);
  }
}

TEST_CASE("bilinear_eval is linear along grid lines") {
  const Grid3& cg = MatrixGameSpec::climbing().grid_a;
  RandomSource rng(406, "bilinear-lines");
  const double lines[3] = {0.0, 0.5, 1.0};
  for (double fixed : lines) {
    for (int trial = 0; trial < 1000; ++trial) {
      // Two points in the same half plus a convex combination of them.
      const double base = rng.bernoulli(0.5) ? 0.0 : 0.5;
      const double y1 = base + 0.5 * rng.uniform();
      const double y2 = base + 0.5 * rng.uniform();
      const double lambda = rng.uniform();
      const double mix = lambda * y1 + (1.0 - lambda) * y2;
      const double direct = bilinear_eval(cg, fixed, mix);
      const double blended = lambda * bilinear_eval(cg, fixed, y1) +
                             (1.0 - lambda) * bilinear_eval(cg, fixed, y2);
      CHECK(direct == doctest::Approx(blended).epsilon(1e-10));
      // Same along the other axis.
      const double direct_t = bilinear_eval(cg, mix, fixed);
      const double blended_t = lambda * bilinear_eval(cg, y1, fixed) +
                               (1.0 - lambda) * bilinear_eval(cg, y2, fixed);
      CHECK(direct_t == doctest::Approx(blended_t).epsilon(1e-10));
    }
  }
}

TEST_CASE("matrix_game_step: climbing game is deterministic and terminal") {
  const MatrixGameSpec cg = MatrixGameSpec::climbing();
  RandomSource rng(1, "cg-step");
  const Transition tr = matrix_game_step(cg, 0.0, 0.0, rng);
  CHECK(tr.reward == 11.0);
  CHECK(tr.terminal);
  CHECK(tr.next == 0);
}

TEST_CASE("matrix_game_step: stochastic center pays 14 or 0 evenly") {
  const MatrixGameSpec pscg = MatrixGameSpec::partially_stochastic();
  RandomSource rng(2, "pscg-step");
  int highs = 0, lows = 0;
  for (int i = 0; i < 10000; ++i) {
    const double r = matrix_game_step(pscg, 0.5, 0.5, rng).reward;
    if (r == 14.0) {
      ++highs;
    } else {
      REQUIRE(r == 0.0);
      ++lows;
    }
  }
  CHECK(highs + lows == 10000);
  CHECK(std::abs(highs - 5000) < 250);
}

TEST_CASE("matrix_game_step: the grids agree away from the center") {
  const MatrixGameSpec pscg = MatrixGameSpec::partially_stochastic();
  RandomSource rng(3, "pscg-corner");
  for (int i = 0; i < 100; ++i) {
    CHECK(matrix_game_step(pscg, 0.0, 0.0, rng).reward == 11.0);
  }
}

TEST_CASE("colormap_grid resolutions") {
  const MatrixGameSpec cg = MatrixGameSpec::climbing();
  const auto grid3 = colormap_grid(cg, 3);
  const double expect[3][3] = {{11, -30, 0}, {-30, 7, 6}, {0, 0, 5}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(grid3[i][j] == expect[i][j]);
    }
  }
  const auto grid2 = colormap_grid(cg, 2);
  CHECK(grid2[0][0] == 11.0);
  CHECK(grid2[0][1] == 0.0);
  CHECK(grid2[1][0] == 0.0);
  CHECK(grid2[1][1] == 5.0);

  const MatrixGameSpec pscg = MatrixGameSpec::partially_stochastic();
  CHECK(colormap_grid(pscg, 3)[1][1] == 7.0);  // mean of 14 and 0

  CHECK_THROWS_AS(colormap_grid(cg, 1), std::invalid_argument);
}
