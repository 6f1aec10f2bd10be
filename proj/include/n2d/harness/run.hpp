#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "n2d/agents/agent.hpp"
#include "n2d/harness/config.hpp"

namespace n2d::harness {

/// One evaluation point. Everything except wall_clock goes to metrics.csv;
/// wall_clock is written to timing.csv so metrics stay byte-reproducible.
struct MetricRow {
  std::size_t step = 0;
  /// Mean return of the training episodes that finished since the previous row.
  std::optional<double> train_return;
  std::size_t episodes = 0;  // training episodes finished so far
  double eval_mean = 0.0;
  double eval_min = 0.0;
  double eval_max = 0.0;
  /// Mean loss per update since the previous row; absent when no update ran.
  std::optional<double> loss_nec;
  std::optional<double> loss_dqn;
  double lambda = 0.0;
  double epsilon = 0.0;
  std::vector<std::size_t> dnd_sizes;
  double wall_clock = 0.0;  // seconds since the run started
};

/// Column names of metrics.csv, in order:
///   step,train_return,episodes,eval_mean,eval_min,eval_max,loss_nec,loss_dqn,
///   lambda,epsilon,dnd_sizes
/// Absent optionals are empty cells; dnd_sizes is '|'-joined per action.
const std::vector<std::string>& metric_columns();
void write_metrics(std::ostream& out, const std::vector<MetricRow>& rows);
std::vector<MetricRow> read_metrics(std::istream& in);

struct EvalStats {
  double mean = 0.0, min = 0.0, max = 0.0;
};

/// `episodes` greedy episodes on `env`, reading the agent through its const
/// interface only. A deterministic environment under a greedy policy
/// replays the same episode every time, so one rollout stands for all.
EvalStats evaluate(const agents::Agent& agent, envs::Environment& env, std::size_t episodes,
                   std::size_t frame_stack);

struct RunOptions {
  /// Called after each row is recorded (progress reporting).
  std::function<void(const MetricRow&)> on_row;
};

struct RunResult {
  std::vector<MetricRow> rows;
  std::filesystem::path dir;
};

/// Trains cfg.agent on cfg.env for cfg.total_steps, evaluating at step 0
/// and every eval_period steps (plus the final step). Writes into `out_dir`:
///   metrics.csv, timing.csv, config.resolved, checkpoint/, plots/learning_curve.svg
/// If training throws, the metrics so far and a checkpoint are written
/// before the exception propagates.
RunResult run(const RunConfig& cfg, const std::filesystem::path& out_dir, const RunOptions& options = {});

/// Root for run directories: $N2D_OUTPUT_ROOT, else "runs".
std::filesystem::path output_root();

}  // namespace n2d::harness
