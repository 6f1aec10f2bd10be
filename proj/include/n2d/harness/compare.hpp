#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "n2d/harness/run.hpp"

namespace n2d::harness {

/// Linear-interpolation quantile (type 7) of a non-empty sample.
double quantile(std::vector<double> values, double q);
double median(std::vector<double> values);

struct CurvePoint {
  std::size_t step = 0;
  double median = 0.0, q1 = 0.0, q3 = 0.0;
};

/// Per-step median and quartiles of eval_mean across runs. Only steps
/// present in every run are kept.
std::vector<CurvePoint> aggregate(const std::vector<std::vector<MetricRow>>& runs);

/// Step of the first row with eval_mean >= threshold. When none reaches it
/// the result is `budget` and `censored` (if given) is set.
std::size_t steps_to_threshold(const std::vector<MetricRow>& rows, double threshold, std::size_t budget,
                               bool* censored = nullptr);

struct Arm {
  std::string label;
  RunConfig config;
};

struct SeedRun {
  std::uint64_t seed = 0;
  std::vector<MetricRow> rows;
  std::string error;  // non-empty when the run failed
};

struct ArmResult {
  std::string label;
  std::vector<SeedRun> runs;
  std::vector<CurvePoint> curve;
  std::vector<std::size_t> threshold_steps;  // successful runs only, censored at the budget
  std::size_t censored = 0;
  std::optional<double> median_steps;
};

struct CompareOptions {
  std::optional<double> threshold;
  std::size_t jobs = 1;
  /// Progress callback: arm label, seed, finished row.
  std::function<void(const std::string&, std::uint64_t, const MetricRow&)> on_row;
  /// Called when a run finishes or fails.
  std::function<void(const std::string&, const SeedRun&)> on_done;
};

struct CompareResult {
  std::vector<ArmResult> arms;
  std::filesystem::path dir;
  std::size_t failures = 0;
};

/// Runs every arm under every seed (arm config seed replaced), each into
/// out_dir/<label>/seed_<k>. A failing run is recorded and the rest carry
/// on. Writes summary.csv, curves.csv, summary.txt and plots/compare.svg.
/// Throws UsageError for fewer than two arms, duplicate labels or no seeds.
CompareResult compare(const std::vector<Arm>& arms, const std::vector<std::uint64_t>& seeds,
                      const std::filesystem::path& out_dir, const CompareOptions& options = {});

struct SweepSnapshot {
  std::size_t step = 0;
  std::vector<double> medians;  // per capacity, in sweep order
};

struct SweepResult {
  std::vector<std::size_t> capacities;  // deduplicated, ascending
  CompareResult comparison;
  SweepSnapshot early, final;
  std::vector<std::string> warnings;
};

/// First eval step at or after 10% of training.
std::size_t early_checkpoint(const std::vector<CurvePoint>& curve, std::size_t total_steps);

/// Replay-capacity sweep on `base` (duplicates dropped with a warning).
/// Writes the compare outputs (one curve per capacity) plus snapshot.csv.
/// Throws UsageError with fewer than two distinct capacities.
SweepResult buffer_sweep(const RunConfig& base, std::vector<std::size_t> capacities,
                         const std::vector<std::uint64_t>& seeds, const std::filesystem::path& out_dir,
                         const CompareOptions& options = {});

/// Desk-scale MiniPong defaults shared by the presets.
RunConfig minipong_base();
/// nec2dqn, nstep_dqn and double_dqn on MiniPong, threshold +3.
std::vector<Arm> preset_fig3(const RunConfig& base);
constexpr double kFig3Threshold = 3.0;
/// The three replay capacities of the buffer sweep (nec2dqn).
std::vector<std::size_t> preset_fig45_capacities();

std::vector<std::uint64_t> seed_list(std::size_t count, std::uint64_t first = 0);

}  // namespace n2d::harness
