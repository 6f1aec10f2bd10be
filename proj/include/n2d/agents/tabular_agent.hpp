#pragma once

#include <random>

#include "n2d/agents/agent.hpp"
#include "n2d/agents/tabular.hpp"

namespace n2d::agents {

/// Q-learning over the environment's discrete state ids.
class TabularQAgent final : public Agent {
 public:
  TabularQAgent(const AgentConfig& config, std::size_t states, std::size_t actions);

  AgentKind kind() const override { return AgentKind::Tabular; }
  std::size_t action_count() const override { return q_.actions(); }
  std::size_t act(const envs::Observation& obs) override;
  std::vector<double> greedy_values(const envs::Observation& obs) const override;
  void observe(const envs::Observation& obs, std::size_t action, double reward,
               const envs::Observation& next, bool done) override;
  void end_episode() override {}
  void abandon_episode() override {}

  std::size_t global_step() const override { return step_; }
  double epsilon() const override { return cfg_.epsilon.at(step_); }

  const QTable& table() const { return q_; }

  void save(const std::filesystem::path& dir) const override;
  void load(const std::filesystem::path& dir) override;

 private:
  static std::size_t index_of(const envs::Observation& obs);

  AgentConfig cfg_;
  QTable q_;
  std::mt19937_64 rng_;
  std::size_t step_ = 0;
};

}  // namespace n2d::agents
