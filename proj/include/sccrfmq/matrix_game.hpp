#ifndef SCCRFMQ_MATRIX_GAME_HPP
#define SCCRFMQ_MATRIX_GAME_HPP

#include <array>
#include <vector>

#include "sccrfmq/core.hpp"
#include "sccrfmq/random.hpp"

namespace sccrfmq {

// 3x3 payoff grid with nodes at {0, 0.5, 1}^2. First index follows agent 1's
// action, second index agent 2's.
using Grid3 = std::array<std::array<double, 3>, 3>;

// A fully cooperative one-shot game over [0,1]^2, built by bilinear
// interpolation of a payoff grid. A stochastic spec carries two grids and a
// fair coin picks one per evaluation.
struct MatrixGameSpec {
  Grid3 grid_a{};
  Grid3 grid_b{};
  bool stochastic = false;

  // Climbing game: two Nash equilibria, (0,0) pays 11 and Pareto-dominates
  // (0.5,0.5) which pays 7, with -30 pits between them.
  static MatrixGameSpec climbing();
  // Partially stochastic climbing game: identical except the center node
  // pays 14 or 0 with equal probability.
  static MatrixGameSpec partially_stochastic();
  static MatrixGameSpec custom(const Grid3& grid);
  static MatrixGameSpec custom(const Grid3& grid_a, const Grid3& grid_b);
};

// Bilinear interpolation of the grid at (a1, a2) in [0,1]^2.
// Exact at the nine nodes and linear along every grid line.
double bilinear_eval(const Grid3& grid, double a1, double a2);

// Expected payoff at (a1, a2); mean of both grids for a stochastic spec.
double expected_payoff(const MatrixGameSpec& spec, double a1, double a2);

// Play one joint action. Always terminal; both agents receive `reward`.
Transition matrix_game_step(const MatrixGameSpec& spec, double a1, double a2,
                            RandomSource& rng);

// resolution x resolution matrix of expected payoffs sampled uniformly on
// [0,1]^2; entry [i][j] is the payoff at (i/(res-1), j/(res-1)).
std::vector<std::vector<double>> colormap_grid(const MatrixGameSpec& spec,
                                               int resolution);

}  // namespace sccrfmq

#endif  // SCCRFMQ_MATRIX_GAME_HPP
