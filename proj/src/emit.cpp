#include "sccrfmq/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace sccrfmq {

namespace {

// Mean and standard error across runs of the per-run cumulative averages.
struct AggregateCurve {
  std::vector<double> mean;
  std::vector<double> stderr_;
};

AggregateCurve aggregate_curve(const ExperimentResult& result) {
  if (result.runs.empty()) {
    throw std::invalid_argument("aggregate_curve: no runs");
  }
  const std::size_t episodes = result.runs[0].rewards.size();
  for (const MetricSeries& run : result.runs) {
    if (run.rewards.size() != episodes) {
      throw std::invalid_argument("aggregate_curve: ragged run lengths");
    }
  }
  std::vector<std::vector<double>> curves;
  curves.reserve(result.runs.size());
  for (const MetricSeries& run : result.runs) {
    curves.push_back(run.cumulative_avg());
  }
  const double n_runs = static_cast<double>(curves.size());
  AggregateCurve agg;
  agg.mean.resize(episodes);
  agg.stderr_.resize(episodes, 0.0);
  for (std::size_t k = 0; k < episodes; ++k) {
    double sum = 0.0;
    for (const auto& curve : curves) sum += curve[k];
    const double mean = sum / n_runs;
    agg.mean[k] = mean;
    if (curves.size() > 1) {
      double ss = 0.0;
      for (const auto& curve : curves) {
        const double d = curve[k] - mean;
        ss += d * d;
      }
      agg.stderr_[k] = std::sqrt(ss / (n_runs - 1.0)) / std::sqrt(n_runs);
    }
  }
  return agg;
}

std::ofstream open_or_throw(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("emit: cannot open '" + path.string() +
                             "' for writing");
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

void write_run_csv(std::ostream& out, int run,
                   std::span<const double> rewards) {
  out << "run,episode,reward\n";
  for (std::size_t e = 0; e < rewards.size(); ++e) {
    out << run << ',' << e << ',' << format_double(rewards[e]) << '\n';
  }
}

void write_aggregate_csv(std::ostream& out, const ExperimentResult& result) {
  const AggregateCurve agg = aggregate_curve(result);
  out << "episode,mean_cumavg,stderr\n";
  for (std::size_t k = 0; k < agg.mean.size(); ++k) {
    out << k << ',' << format_double(agg.mean[k]) << ','
        << format_double(agg.stderr_[k]) << '\n';
  }
}

void write_curve_svg(std::ostream& out, const ExperimentResult& result,
                     const ExperimentConfig& cfg) {
  const AggregateCurve agg = aggregate_curve(result);
  const std::size_t episodes = agg.mean.size();
  const std::size_t stride = std::max<std::size_t>(1, episodes / 1600);

  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < episodes; k += stride) idx.push_back(k);
  if (idx.back() != episodes - 1) idx.push_back(episodes - 1);

  double lo = agg.mean[idx[0]] - agg.stderr_[idx[0]];
  double hi = lo;
  for (std::size_t k : idx) {
    lo = std::min(lo, agg.mean[k] - agg.stderr_[k]);
    hi = std::max(hi, agg.mean[k] + agg.stderr_[k]);
  }
  if (hi - lo < 1e-12) {
    hi += 0.5;
    lo -= 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;

  const double width = 960.0, height = 540.0;
  const double ml = 70.0, mr = 20.0, mt = 40.0, mb = 50.0;
  const double pw = width - ml - mr, ph = height - mt - mb;
  const auto sx = [&](double episode) {
    return ml + pw * episode / static_cast<double>(episodes - 1 ? episodes - 1 : 1);
  };
  const auto sy = [&](double value) {
    return mt + ph * (1.0 - (value - lo) / (hi - lo));
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width
      << ' ' << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << ml << "\" y=\"24\" font-family=\"sans-serif\" "
         "font-size=\"16\">"
      << to_string(cfg.game) << ": mean cumulative average reward ("
      << cfg.runs << " runs)</text>\n";

  // Axes with min/mid/max ticks.
  out << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw
      << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
      << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double v = lo + (hi - lo) * i / 4.0;
    out << "<text x=\"" << ml - 8 << "\" y=\"" << sy(v) + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"12\">"
        << format_double(std::round(v * 100.0) / 100.0) << "</text>\n";
    out << "<line x1=\"" << ml - 4 << "\" y1=\"" << sy(v) << "\" x2=\"" << ml
        << "\" y2=\"" << sy(v) << "\" stroke=\"black\"/>\n";
  }
  out << "<text x=\"" << ml << "\" y=\"" << mt + ph + 20
      << "\" font-family=\"sans-serif\" font-size=\"12\">0</text>\n";
  out << "<text x=\"" << ml + pw << "\" y=\"" << mt + ph + 20
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
      << episodes << " episodes</text>\n";

  // Standard error band.
  out << "<polygon fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"none\" "
         "points=\"";
  for (std::size_t k : idx) {
    out << sx(static_cast<double>(k)) << ','
        << sy(agg.mean[k] + agg.stderr_[k]) << ' ';
  }
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    out << sx(static_cast<double>(*it)) << ','
        << sy(agg.mean[*it] - agg.stderr_[*it]) << ' ';
  }
  out << "\"/>\n";

  // Mean curve.
  out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" "
         "points=\"";
  for (std::size_t k : idx) {
    out << sx(static_cast<double>(k)) << ',' << sy(agg.mean[k]) << ' ';
  }
  out << "\"/>\n";
  out << "</svg>\n";
}

void write_colormap_csv(std::ostream& out, const MatrixGameSpec& spec,
                        int resolution) {
  const auto grid = colormap_grid(spec, resolution);
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << (j ? "," : "") << format_double(row[j]);
    }
    out << '\n';
  }
}

void write_colormap_ppm(std::ostream& out, const MatrixGameSpec& spec,
                        int resolution) {
  const auto grid = colormap_grid(spec, resolution);
  double lo = grid[0][0], hi = grid[0][0];
  for (const auto& row : grid) {
    for (double v : row) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  const double span = hi - lo;
  out << "P3\n" << resolution << ' ' << resolution << "\n255\n";
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      const int g =
          span > 0.0
              ? static_cast<int>(std::lround(255.0 * (row[j] - lo) / span))
              : 0;
      out << (j ? " " : "") << g << ' ' << g << ' ' << g;
    }
    out << '\n';
  }
}

void emit_outputs(const ExperimentResult& result, const ExperimentConfig& cfg,
                  std::span<const std::string> snapshots) {
  namespace fs = std::filesystem;
  const fs::path dir(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("emit: cannot create directory '" + dir.string() +
                             "': " + ec.message());
  }
  for (std::size_t r = 0; r < result.runs.size(); ++r) {
    auto out = open_or_throw(dir / ("run_" + std::to_string(r) + ".csv"));
    write_run_csv(out, static_cast<int>(r), result.runs[r].rewards);
  }
  {
    auto out = open_or_throw(dir / "aggregate.csv");
    write_aggregate_csv(out, result);
  }
  {
    auto out = open_or_throw(dir / "curve.svg");
    write_curve_svg(out, result, cfg);
  }
  {
    auto out = open_or_throw(dir / "config.txt");
    out << describe(cfg);
  }
  if (cfg.game != GameKind::kBoat) {
    const MatrixGameSpec spec = matrix_spec_of(cfg);
    {
      auto out = open_or_throw(dir / "colormap.csv");
      write_colormap_csv(out, spec, 101);
    }
    {
      auto out = open_or_throw(dir / "colormap.ppm");
      write_colormap_ppm(out, spec, 101);
    }
  }
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    auto out = open_or_throw(dir / ("snapshot_run0_agent" + std::to_string(i) +
                                    ".json"));
    out << snapshots[i] << '\n';
  }
}

}  // namespace sccrfmq
