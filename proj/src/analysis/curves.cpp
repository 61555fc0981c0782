#include "macrorl/analysis/curves.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "macrorl/core/errors.hpp"

namespace macrorl::analysis {

double mean_of(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sample_std(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  // Welford; exact zero for a constant sample
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t k = 0;
  for (double x : xs) {
    ++k;
    const double d = x - mean;
    mean += d / static_cast<double>(k);
    m2 += d * (x - mean);
  }
  return std::sqrt(m2 / static_cast<double>(xs.size() - 1));
}

double median_of(std::vector<double> xs) {
  if (xs.empty()) throw Error("median of an empty sample");
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  if (n % 2 == 1) return xs[n / 2];
  const double lo = xs[n / 2 - 1];
  const double hi = xs[n / 2];
  if (std::isinf(lo) || std::isinf(hi)) return std::isinf(lo) ? lo : hi;
  return 0.5 * (lo + hi);
}

std::vector<double> trailing_mean(std::span<const double> xs, std::size_t window) {
  if (window == 0) throw Error("smoothing window must be positive");
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::size_t begin = i + 1 > window ? i + 1 - window : 0;
    out[i] = mean_of(xs.subspan(begin, i + 1 - begin));
  }
  return out;
}

std::vector<CurvePoint> aggregate_curves(const std::vector<std::vector<MetricsRow>>& trials, std::size_t window) {
  if (trials.empty()) return {};
  const auto& grid = trials.front();
  for (const auto& t : trials) {
    if (t.size() != grid.size()) throw Error("aggregate_curves: trials have mismatched epoch grids");
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i].epoch != grid[i].epoch) throw Error("aggregate_curves: trials have mismatched epoch grids");
    }
  }

  std::vector<std::vector<double>> smoothed;
  smoothed.reserve(trials.size());
  for (const auto& t : trials) {
    std::vector<double> returns;
    returns.reserve(t.size());
    for (const auto& r : t) returns.push_back(r.mean_return);
    smoothed.push_back(trailing_mean(returns, window));
  }

  std::vector<CurvePoint> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> xs;
    std::vector<double> sm;
    for (std::size_t t = 0; t < trials.size(); ++t) {
      xs.push_back(trials[t][i].mean_return);
      sm.push_back(smoothed[t][i]);
    }
    CurvePoint p;
    p.epoch = grid[i].epoch;
    p.mean = mean_of(xs);
    p.std = sample_std(xs);
    p.min = *std::min_element(xs.begin(), xs.end());
    p.max = *std::max_element(xs.begin(), xs.end());
    p.smoothed_mean = mean_of(sm);
    out.push_back(p);
  }
  return out;
}

std::vector<std::vector<MetricsRow>> group_by_trial(const std::vector<MetricsRow>& rows) {
  std::map<std::size_t, std::vector<MetricsRow>> by_trial;
  for (const auto& r : rows) by_trial[r.trial].push_back(r);
  std::vector<std::vector<MetricsRow>> out;
  for (auto& [_, v] : by_trial) out.push_back(std::move(v));
  return out;
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{}", x);
}

void write_metrics_csv(std::ostream& out, const std::vector<MetricsRow>& rows) {
  out << kMetricsHeader << '\n';
  for (const auto& r : rows) {
    out << r.trial << ',' << r.epoch << ',' << r.env_steps << ',' << format_number(r.mean_return) << ','
        << format_number(r.std_return) << ',' << format_number(r.action_gap_mean) << ','
        << format_number(r.epsilon) << ',' << (r.macro_event ? 1 : 0) << '\n';
  }
}

std::vector<MetricsRow> read_metrics_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kMetricsHeader) throw Error("metrics.csv: unexpected header");
  std::vector<MetricsRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 8) throw Error("metrics.csv line " + std::to_string(lineno) + ": expected 8 columns");
    try {
      MetricsRow r;
      r.trial = std::stoul(cells[0]);
      r.epoch = std::stoul(cells[1]);
      r.env_steps = std::stoul(cells[2]);
      r.mean_return = std::stod(cells[3]);
      r.std_return = std::stod(cells[4]);
      r.action_gap_mean = std::stod(cells[5]);
      r.epsilon = std::stod(cells[6]);
      r.macro_event = cells[7] == "1";
      rows.push_back(r);
    } catch (const std::logic_error&) {
      throw Error("metrics.csv line " + std::to_string(lineno) + ": malformed number");
    }
  }
  return rows;
}

void write_curves_csv(std::ostream& out, const std::vector<CurvePoint>& points) {
  out << kCurvesHeader << '\n';
  for (const auto& p : points) {
    out << p.epoch << ',' << format_number(p.mean) << ',' << format_number(p.std) << ','
        << format_number(p.min) << ',' << format_number(p.max) << ',' << format_number(p.smoothed_mean)
        << '\n';
  }
}

void write_gap_csv(std::ostream& out, const std::vector<GapBucket>& buckets, const std::string& agent_tag,
                   bool header) {
  if (header) out << kGapHeader << '\n';
  for (const auto& b : buckets) {
    out << b.distance << ',' << format_number(b.mean_gap) << ',' << format_number(b.mean_top_q) << ','
        << agent_tag << '\n';
  }
}

}  // namespace macrorl::analysis
