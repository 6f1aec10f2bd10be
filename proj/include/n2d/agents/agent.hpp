#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "n2d/agents/policy.hpp"
#include "n2d/envs/env.hpp"
#include "n2d/envs/observation.hpp"
#include "n2d/numerics/network.hpp"
#include "n2d/numerics/params.hpp"

namespace n2d::agents {

enum class AgentKind { Tabular, Dqn, DoubleDqn, NStepDqn, Nec, Nec2Dqn };

std::string to_string(AgentKind kind);
/// Accepts the lowercase names used in configs (tabular, dqn, double_dqn,
/// nstep_dqn, nec, nec2dqn); throws std::invalid_argument otherwise.
AgentKind parse_agent_kind(const std::string& name);

struct AgentConfig {
  AgentKind kind = AgentKind::Nec2Dqn;
  double gamma = 0.99;
  std::size_t n_step = 10;
  std::size_t neighbours = 50;
  double dnd_delta = 1e-3;
  double dnd_alpha = 0.1;
  std::size_t dnd_capacity = 5000;
  std::size_t batch_size = 32;
  std::size_t replay_period = 4;
  std::size_t replay_capacity = 10000;
  /// No gradient steps until the buffer holds this many records (or is full,
  /// when the capacity is smaller).
  std::size_t replay_start = 1000;
  std::size_t change_step = 30000;
  EpsilonSchedule epsilon;
  num::RmsPropConfig optimizer{1e-3, 0.95, 0.01};
  /// Hard target-network copy period (one-step baselines only).
  std::size_t target_period = 10000;
  std::vector<std::size_t> dqn_hidden{128};
  std::vector<std::size_t> nec_hidden{128};
  std::size_t embedding = 64;
  /// Put a 3x3 convolution in front of the dense layers.
  bool conv = false;
  double tabular_alpha = 0.1;
  std::uint64_t seed = 0;
};

/// Running means of the training losses since the last reset.
struct LossMeter {
  double nec_sum = 0.0, dqn_sum = 0.0;
  std::size_t nec_count = 0, dqn_count = 0;

  void add_nec(double v) { nec_sum += v, ++nec_count; }
  void add_dqn(double v) { dqn_sum += v, ++dqn_count; }
  std::optional<double> nec_mean() const;
  std::optional<double> dqn_mean() const;
  void reset() { *this = {}; }
};

class Agent {
 public:
  virtual ~Agent() = default;

  virtual AgentKind kind() const = 0;
  virtual std::size_t action_count() const = 0;

  /// Exploratory action at the current global step.
  virtual std::size_t act(const envs::Observation& obs) = 0;
  /// Greedy action values. Must not change any learnable or bookkeeping state.
  virtual std::vector<double> greedy_values(const envs::Observation& obs) const = 0;
  std::size_t greedy_action(const envs::Observation& obs) const { return argmax(greedy_values(obs)); }

  /// Records one environment step and advances the global step S; may run a
  /// training update.
  virtual void observe(const envs::Observation& obs, std::size_t action, double reward,
                       const envs::Observation& next, bool done) = 0;
  /// Episode-end processing (targets, buffer and memory writes).
  virtual void end_episode() = 0;
  /// Drops the partial episode without learning from it.
  virtual void abandon_episode() = 0;

  virtual std::size_t global_step() const = 0;
  virtual double epsilon() const = 0;
  virtual double lambda() const { return 0.0; }
  virtual std::vector<std::size_t> dnd_sizes() const { return {}; }
  /// NEC forward passes plus DND lookups, in total and while S >= CS.
  virtual std::size_t nec_queries() const { return 0; }
  virtual std::size_t nec_queries_after_change() const { return 0; }

  LossMeter& losses() { return losses_; }
  const LossMeter& losses() const { return losses_; }

  virtual void save(const std::filesystem::path& dir) const = 0;
  virtual void load(const std::filesystem::path& dir) = 0;

 protected:
  LossMeter losses_;
};

/// Builds the agent for `config.kind`. `frame_shape` is the stacked
/// observation shape; `state_count` is only used by the tabular agent.
std::unique_ptr<Agent> make_agent(const AgentConfig& config, const num::Shape& frame_shape,
                                  std::size_t actions, std::size_t state_count = 0);

/// Dense (optionally conv-fronted) stack ending in a linear layer of `out` units.
num::NetworkSpec make_network_spec(const num::Shape& input, const std::vector<std::size_t>& hidden,
                                   std::size_t out, bool conv);

/// Independent child seed for component `stream` of a run.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

struct EpisodeStats {
  double episode_return = 0.0;
  std::size_t steps = 0;
  /// Cut short by the step budget rather than ended by the environment.
  bool truncated = false;
};

/// Environment fault surfaced while running an episode.
class EpisodeAborted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using StepHook = std::function<void(const Agent&)>;

/// One training episode: epsilon-greedy acting, per-step observe(), then
/// end_episode(). Stops early once the agent's global step reaches
/// `step_budget`. `after_step` runs after every observe().
EpisodeStats run_episode(Agent& agent, envs::Environment& env, envs::ObservationPipeline& pipeline,
                         std::size_t step_budget, const StepHook& after_step = {});

}  // namespace n2d::agents
