#include "sccrfmq/matrix_game.hpp"

#include <stdexcept>
#include <utility>

namespace sccrfmq {

namespace {

constexpr Grid3 kClimbingGrid = {{{11.0, -30.0, 0.0},  //
                                  {-30.0, 7.0, 6.0},
                                  {0.0, 0.0, 5.0}}};

// Locate the half-open cell containing a and the local coordinate inside it.
std::pair<int, double> grid_cell(double a) {
  const int i = a < 0.5 ? 0 : 1;
  return {i, (a - 0.5 * i) / 0.5};
}

}  // namespace

MatrixGameSpec MatrixGameSpec::climbing() {
  MatrixGameSpec spec;
  spec.grid_a = kClimbingGrid;
  return spec;
}

MatrixGameSpec MatrixGameSpec::partially_stochastic() {
  MatrixGameSpec spec;
  spec.grid_a = kClimbingGrid;
  spec.grid_b = kClimbingGrid;
  spec.grid_a[1][1] = 14.0;
  spec.grid_b[1][1] = 0.0;
  spec.stochastic = true;
  return spec;
}

MatrixGameSpec MatrixGameSpec::custom(const Grid3& grid) {
  MatrixGameSpec spec;
  spec.grid_a = grid;
  return spec;
}

MatrixGameSpec MatrixGameSpec::custom(const Grid3& grid_a,
                                      const Grid3& grid_b) {
  MatrixGameSpec spec;
  spec.grid_a = grid_a;
  spec.grid_b = grid_b;
  spec.stochastic = true;
  return spec;
}

double bilinear_eval(const Grid3& grid, double a1, double a2) {
  if (!(a1 >= 0.0 && a1 <= 1.0) || !(a2 >= 0.0 && a2 <= 1.0)) {
    throw std::invalid_argument("bilinear_eval: action outside [0,1]");
  }
  const auto [i, u] = grid_cell(a1);
  const auto [j, v] = grid_cell(a2);
  return (1.0 - u) * (1.0 - v) * grid[i][j] + u * (1.0 - v) * grid[i + 1][j] +
         (1.0 - u) * v * grid[i][j + 1] + u * v * grid[i + 1][j + 1];
}

double expected_payoff(const MatrixGameSpec& spec, double a1, double a2) {
  const double va = bilinear_eval(spec.grid_a, a1, a2);
  if (!spec.stochastic) return va;
  return 0.5 * (va + bilinear_eval(spec.grid_b, a1, a2));
}

Transition matrix_game_step(const MatrixGameSpec& spec, double a1, double a2,
                            RandomSource& rng) {
  const Grid3& grid = spec.stochastic && !rng.bernoulli(0.5) ? spec.grid_b
                                                             : spec.grid_a;
  return Transition{0, bilinear_eval(grid, a1, a2), true};
}

std::vector<std::vector<double>> colormap_grid(const MatrixGameSpec& spec,
                                               int resolution) {
  if (resolution < 2) {
    throw std::invalid_argument("colormap_grid: resolution must be >= 2");
  }
  std::vector<std::vector<double>> out(
      resolution, std::vector<double>(resolution, 0.0));
  const double step = 1.0 / (resolution - 1);
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      out[i][j] = expected_payoff(spec, i * step, j * step);
    }
  }
  return out;
}

}  // namespace sccrfmq
