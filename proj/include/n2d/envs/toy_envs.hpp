#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <utility>

#include "n2d/envs/env.hpp"

namespace n2d::envs {

/// Left/right chain of `n` cells starting at cell 0. Moving right out of
/// cell n-2 into the last cell pays +1 and ends the episode; moving left at
/// cell 0 stays put. Episodes are capped at 4n steps.
class ChainEnv final : public Environment {
 public:
  static constexpr std::size_t kLeft = 0;
  static constexpr std::size_t kRight = 1;

  explicit ChainEnv(std::size_t n_states);

  num::Tensor reset() override;
  StepResult step(std::size_t action) override;
  std::size_t action_count() const override { return 2; }
  num::Shape observation_shape() const override { return {1, 1, n_}; }
  std::vector<double> plane_weights() const override { return {1.0}; }
  std::size_t episode_cap() const override { return 4 * n_; }
  std::string name() const override { return "chain"; }

  std::optional<std::size_t> state_index() const override { return position_; }
  std::size_t state_count() const override { return n_; }
  std::optional<std::size_t> start_state() const override { return 0; }
  std::optional<ModelStep> model(std::size_t state, std::size_t action) const override;

 private:
  num::Tensor observe() const;

  std::size_t n_;
  std::size_t position_ = 0;
  std::size_t steps_ = 0;
  bool active_ = false;
};

struct Cell {
  std::size_t x = 0;
  std::size_t y = 0;
  auto operator<=>(const Cell&) const = default;
};

struct GridworldConfig {
  std::size_t width = 5;
  std::size_t height = 5;
  std::set<Cell> walls;
  Cell start{0, 0};
  Cell goal{4, 4};
  std::optional<Cell> trap;
};

/// Four-action grid (up, right, down, left). +1 on the goal, -1 on the
/// trap, both terminal; bumping into a wall or the border leaves the agent
/// in place. Planes: agent, walls, goal, trap.
class GridworldEnv final : public Environment {
 public:
  static constexpr std::size_t kUp = 0, kRight = 1, kDown = 2, kLeft = 3;

  /// Throws std::invalid_argument when the goal is unreachable from the
  /// start or the layout is inconsistent.
  explicit GridworldEnv(GridworldConfig config);

  num::Tensor reset() override;
  StepResult step(std::size_t action) override;
  std::size_t action_count() const override { return 4; }
  num::Shape observation_shape() const override { return {4, cfg_.height, cfg_.width}; }
  std::vector<double> plane_weights() const override { return {0.5, 0.1, 0.25, 0.15}; }
  std::size_t episode_cap() const override { return 4 * cfg_.width * cfg_.height; }
  std::string name() const override { return "gridworld"; }

  std::optional<std::size_t> state_index() const override { return index(agent_); }
  std::size_t state_count() const override { return cfg_.width * cfg_.height; }
  std::optional<std::size_t> start_state() const override { return index(cfg_.start); }
  std::optional<ModelStep> model(std::size_t state, std::size_t action) const override;

  /// Fewest moves from start to goal avoiding walls and the trap.
  std::size_t shortest_path_length() const;

 private:
  std::size_t index(Cell c) const { return c.y * cfg_.width + c.x; }
  Cell move(Cell from, std::size_t action) const;
  num::Tensor observe() const;

  GridworldConfig cfg_;
  Cell agent_;
  std::size_t steps_ = 0;
  bool active_ = false;
};

struct MiniPongConfig {
  enum class Serve {
    /// Serve k starts from row cycle[k % 5] of {G/2, G/4, 3G/4-1, G/2-1,
    /// G/2+2}, heading down on even k and up on odd k.
    Cycle,
    /// Every serve starts from the centre row heading down.
    Fixed,
    /// Seeded uniform row in [G/4, G - G/4) and random vertical direction.
    Random,
  };

  std::size_t grid_size = 12;
  int points_to_win = 5;
  std::size_t paddle_height = 3;
  Serve serve = Serve::Cycle;
  std::size_t max_steps = 1000;
  std::uint64_t seed = 0;  // only read by Serve::Random
};

/// Paddle game on a square grid. The agent's paddle sits in column 0, the
/// scripted opponent's in the last column. Actions: up, stay, down.
///
/// Each step the agent paddle moves, then the opponent moves one cell
/// toward the row the ball occupied one step earlier, then the ball moves
/// one cell diagonally. The ball reflects off the top and bottom walls; a
/// paddle hit reverses its horizontal direction, and hits on the paddle's
/// first/last cell send it up/down respectively. A miss scores a point
/// (+1 when the opponent misses, -1 when the agent does) and re-serves from
/// the centre column toward the agent with both paddles recentred.
/// Planes: ball, agent paddle, opponent paddle.
class MiniPongEnv final : public Environment {
 public:
  static constexpr std::size_t kUp = 0, kStay = 1, kDown = 2;

  explicit MiniPongEnv(MiniPongConfig config);

  num::Tensor reset() override;
  StepResult step(std::size_t action) override;
  std::size_t action_count() const override { return 3; }
  num::Shape observation_shape() const override {
    return {3, cfg_.grid_size, cfg_.grid_size};
  }
  /// ITU-R 601 luma weights, treating the planes as R, G, B.
  bool deterministic() const override { return cfg_.serve != MiniPongConfig::Serve::Random; }
  std::vector<double> plane_weights() const override { return {0.299, 0.587, 0.114}; }
  std::size_t episode_cap() const override { return cfg_.max_steps; }
  std::string name() const override { return "minipong"; }

  struct Snapshot {
    int ball_row, ball_col, vy, vx;
    int agent_top, opponent_top;
    int agent_points, opponent_points;
  };
  Snapshot snapshot() const;

 private:
  void serve();
  num::Tensor observe() const;

  MiniPongConfig cfg_;
  std::mt19937_64 rng_;
  int size_, height_;
  int ball_row_ = 0, ball_col_ = 0, vy_ = 1, vx_ = -1;
  int lagged_row_ = 0;
  std::size_t serves_ = 0;
  int agent_top_ = 0, opponent_top_ = 0;
  int agent_points_ = 0, opponent_points_ = 0;
  std::size_t steps_ = 0;
  bool active_ = false;
};

}  // namespace n2d::envs
