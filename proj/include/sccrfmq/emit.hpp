#ifndef SCCRFMQ_EMIT_HPP
#define SCCRFMQ_EMIT_HPP

#include <ostream>
#include <span>
#include <string>

#include "sccrfmq/config.hpp"
#include "sccrfmq/experiment.hpp"
#include "sccrfmq/matrix_game.hpp"

namespace sccrfmq {

// Shortest round-trip decimal form; locale-independent, byte-stable.
std::string format_double(double value);

// Header `run,episode,reward`, one row per episode.
void write_run_csv(std::ostream& out, int run, std::span<const double> rewards);

// Header `episode,mean_cumavg,stderr`: mean over runs of the per-run
// cumulative averages, with the standard error across runs.
void write_aggregate_csv(std::ostream& out, const ExperimentResult& result);

// Self-contained line chart of the mean cumulative average with a standard
// error band. No external renderer involved.
void write_curve_svg(std::ostream& out, const ExperimentResult& result,
                     const ExperimentConfig& config);

// Expected-payoff surface as a raw comma matrix (row i: a1 = i/(res-1)).
void write_colormap_csv(std::ostream& out, const MatrixGameSpec& spec,
                        int resolution);

// Same surface as a plain (P3) grayscale PPM, low payoffs dark.
void write_colormap_ppm(std::ostream& out, const MatrixGameSpec& spec,
                        int resolution);

// Write the full output set for an experiment into config.out_dir:
// run_<r>.csv per run, aggregate.csv, curve.svg, config.txt, and for matrix
// games colormap.csv + colormap.ppm. Optionally per-agent snapshot JSON for
// run 0.
void emit_outputs(const ExperimentResult& result,
                  const ExperimentConfig& config,
                  std::span<const std::string> snapshots = {});

}  // namespace sccrfmq

#endif  // SCCRFMQ_EMIT_HPP
