#pragma once

#include <optional>
#include <random>

#include "n2d/agents/agent.hpp"
#include "n2d/dnd/dnd.hpp"
#include "n2d/replay/replay.hpp"

namespace n2d::agents {

struct TrainStats {
  std::optional<double> loss_nec;  // absent when the NEC branch is inactive
  std::optional<double> loss_dqn;  // absent in pure NEC mode
};

/// Blended NEC + DQN agent sharing one N-step target.
///
/// Three settings of the blend weight share this class:
///   nec2dqn    lambda(S) = 1 - S/CS, dropping to 0 at the change step
///   nstep_dqn  lambda == 0 (CS = 0): the NEC side is never built or queried
///   nec        lambda == 1: the DQN side is never built or queried
///
/// Action values are Q = q_n2d(Q_NEC, Q_DQN, lambda). Every step is logged;
/// at episode end the N-step targets are computed with lambda taken at the
/// final S, (s, a, y) go to the replay buffer and, while lambda > 0,
/// (h, y) is written into the taken action's DND. Every `replay_period`
/// steps a minibatch updates the DQN net on (y - Q_DQN)^2 and, while
/// lambda > 0, the encoder on (y - Q_NEC)^2 through the DND lookup.
class Nec2DqnAgent final : public Agent {
 public:
  Nec2DqnAgent(const AgentConfig& config, const num::Shape& frame_shape, std::size_t actions);

  AgentKind kind() const override { return kind_; }
  std::size_t action_count() const override { return actions_; }
  std::size_t act(const envs::Observation& obs) override;
  std::vector<double> greedy_values(const envs::Observation& obs) const override;
  void observe(const envs::Observation& obs, std::size_t action, double reward,
               const envs::Observation& next, bool done) override;
  void end_episode() override;
  void abandon_episode() override;

  std::size_t global_step() const override { return step_; }
  double epsilon() const override { return cfg_.epsilon.at(step_); }
  /// Blend weight at the current global step.
  double lambda() const override { return lambda_at(step_); }
  double lambda_at(std::size_t step) const;
  std::vector<std::size_t> dnd_sizes() const override;
  std::size_t nec_queries() const override { return queries_; }
  std::size_t nec_queries_after_change() const override { return queries_after_change_; }

  /// shared_target() with this agent's N and gamma.
  std::vector<double> shared_targets(const replay::Trajectory& traj, double lam) const;

  /// Q_N2D for each row of `states` (a batch or one unbatched sample) at
  /// blend weight `lam`. Empty tables count as Q_NEC = 0. The non-const form
  /// refreshes DND recency, counts queries and can hand back the embeddings.
  std::vector<std::vector<double>> blended_values(const num::Tensor& states, double lam,
                                                  num::Tensor* embeddings_out = nullptr);
  std::vector<std::vector<double>> blended_values(const num::Tensor& states, double lam) const;

  /// One update of both branches; nothing for an empty batch.
  std::optional<TrainStats> train_step(std::span<const replay::TransitionRecord* const> batch);

  /// mean (y - Q_DQN(s, a))^2 over `batch`, leaving its gradient in the DQN
  /// parameters without stepping the optimizer.
  double dqn_loss_and_grad(std::span<const replay::TransitionRecord* const> batch);
  /// mean (y - Q_NEC(s, a))^2, gradient w.r.t. the encoder via the DND
  /// lookup (neighbour sets held fixed). Refreshes DND recency.
  double nec_loss_and_grad(std::span<const replay::TransitionRecord* const> batch);

  bool has_nec() const { return encoder_.has_value(); }
  bool has_dqn() const { return dqn_.has_value(); }
  num::Network& dqn_network() { return *dqn_; }
  num::Network& encoder() { return *encoder_; }
  dnd::DndTable& dnd(std::size_t action) { return dnds_.at(action); }
  const dnd::DndTable& dnd(std::size_t action) const { return dnds_.at(action); }
  const replay::ReplayBuffer& buffer() const { return buffer_; }
  const replay::Trajectory& trajectory() const { return trajectory_; }

  void save(const std::filesystem::path& dir) const override;
  void load(const std::filesystem::path& dir) override;

 private:
  /// Q_NEC of `action` for every row of the row-major embeddings `keys`.
  using NecValues = std::function<std::vector<double>(std::size_t action, std::span<const double> keys)>;
  std::vector<std::vector<double>> combine(const num::Tensor& states, double lam, const num::Tensor& h,
                                           const NecValues& nec) const;
  void count_queries(std::size_t n);

  AgentConfig cfg_;
  AgentKind kind_;
  std::size_t actions_;
  LambdaSchedule schedule_;
  std::optional<num::Network> dqn_;
  std::optional<num::Network> encoder_;
  std::vector<dnd::DndTable> dnds_;
  replay::ReplayBuffer buffer_;
  replay::Trajectory trajectory_;
  std::vector<std::vector<double>> embeddings_;  // h_t per logged step
  std::vector<double> pending_embedding_;
  std::mt19937_64 rng_;
  std::size_t step_ = 0;
  std::size_t queries_ = 0;
  std::size_t queries_after_change_ = 0;
};

/// y_t from replay::n_step_targets with the bootstrap max_a Q_N2D(s_{t+N}, a)
/// evaluated read-only at blend weight `lam`.
std::vector<double> shared_target(const replay::Trajectory& traj, std::size_t n, double gamma,
                                  const Nec2DqnAgent& agent, double lam);

}  // namespace n2d::agents
