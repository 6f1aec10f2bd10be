#pragma once

#include <random>

#include "n2d/agents/agent.hpp"
#include "n2d/replay/replay.hpp"

namespace n2d::agents {

/// One-step DQN with a hard-copied target network; `double_q` switches the
/// target to the Double DQN form.
class DqnAgent final : public Agent {
 public:
  DqnAgent(const AgentConfig& config, const num::Shape& frame_shape, std::size_t actions);

  AgentKind kind() const override { return double_q_ ? AgentKind::DoubleDqn : AgentKind::Dqn; }
  std::size_t action_count() const override { return actions_; }
  std::size_t act(const envs::Observation& obs) override;
  std::vector<double> greedy_values(const envs::Observation& obs) const override;
  void observe(const envs::Observation& obs, std::size_t action, double reward,
               const envs::Observation& next, bool done) override;
  void end_episode() override {}
  void abandon_episode() override {}

  std::size_t global_step() const override { return step_; }
  double epsilon() const override { return cfg_.epsilon.at(step_); }

  /// One gradient step on `batch`; returns the loss, or nothing for an empty batch.
  std::optional<double> train_step(std::span<const replay::OneStepTransition* const> batch);
  /// Bootstrapped targets the next train_step would regress onto.
  std::vector<double> targets(std::span<const replay::OneStepTransition* const> batch) const;

  num::Network& online() { return online_; }
  num::Network& target() { return target_; }
  const replay::OneStepBuffer& buffer() const { return buffer_; }

  void save(const std::filesystem::path& dir) const override;
  void load(const std::filesystem::path& dir) override;

 private:
  AgentConfig cfg_;
  std::size_t actions_;
  bool double_q_;
  num::Network online_;
  num::Network target_;
  replay::OneStepBuffer buffer_;
  std::mt19937_64 rng_;
  std::size_t step_ = 0;
};

}  // namespace n2d::agents
