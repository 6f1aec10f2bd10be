#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "n2d/envs/env.hpp"

namespace n2d::agents {

/// Dense Q(s, a) table, row per state.
class QTable {
 public:
  QTable() = default;
  QTable(std::size_t states, std::size_t actions, double init = 0.0);

  std::size_t states() const { return states_; }
  std::size_t actions() const { return actions_; }

  double& at(std::size_t s, std::size_t a);
  double at(std::size_t s, std::size_t a) const;
  std::span<const double> row(std::size_t s) const;
  double max(std::size_t s) const;
  std::size_t argmax(std::size_t s) const;  // lowest index among ties

  /// max_{s,a} |Q - other|
  double distance(const QTable& other) const;

  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t states_ = 0;
  std::size_t actions_ = 0;
  std::vector<double> values_;
};

/// Finite MDP with a dense kernel: p(s, a, s') and expected reward r(s, a).
struct TabularMdp {
  std::size_t states = 0;
  std::size_t actions = 0;
  std::vector<double> transition;  // [s][a][s'] row-major
  std::vector<double> reward;      // [s][a]
  double gamma = 0.9;

  double p(std::size_t s, std::size_t a, std::size_t next) const {
    return transition[(s * actions + a) * states + next];
  }
  double r(std::size_t s, std::size_t a) const { return reward[s * actions + a]; }

  /// Throws num::ContractViolation unless every row sums to 1 (within 1e-9),
  /// probabilities are non-negative and gamma lies in [0, 1).
  void validate() const;

  /// Samples s' ~ p(s, a, .).
  std::size_t sample_next(std::size_t s, std::size_t a, std::mt19937_64& rng) const;
};

/// Kernel with Dirichlet(1,...,1) rows and rewards uniform in [-1, 1].
TabularMdp random_mdp(std::size_t states, std::size_t actions, double gamma, std::mt19937_64& rng);

/// Deterministic MDP induced by an environment's model; terminal states
/// become zero-reward self loops.
TabularMdp mdp_from_env(const envs::Environment& env, double gamma);

/// Q <- T Q until the sup-norm Bellman residual of the returned table is
/// below `tol`.
QTable value_iteration(const TabularMdp& mdp, double tol);

/// Sup-norm of T Q - Q.
double bellman_residual(const TabularMdp& mdp, const QTable& q);

/// Q(s,a) += alpha (r + gamma max_a' Q(s',a') - Q(s,a)).
void tabular_q_update(QTable& q, std::size_t s, std::size_t a, double r, std::size_t next, double alpha,
                      double gamma);

/// Q-learning driven by a generative model: each sweep draws one s' for
/// every (s, a) and applies tabular_q_update to all pairs against the
/// pre-sweep table, with step size alpha_k = 1 / (1 + (1 - gamma) k) at
/// sweep k. Every pair is visited every sweep, so exploration is never the
/// bottleneck and the table converges to value_iteration's Q*.
QTable synchronous_q_learning(const TabularMdp& mdp, std::size_t sweeps, std::mt19937_64& rng);

enum class DoubleQSide { Both, A, B };

/// Two-estimator update. With `Both`, A and B are updated from the same
/// pre-update tables:
///   QA(s,a) += alpha (r + gamma QB(s', a*) - QA(s,a)),  a* = argmax QA(s', .)
///   QB(s,a) += alpha (r + gamma QA(s', b*) - QB(s,a)),  b* = argmax QB(s', .)
/// `A` / `B` apply only that half, which is how the estimators decorrelate
/// when driven from a single stream of samples.
void double_q_update(QTable& qa, QTable& qb, std::size_t s, std::size_t a, double r, std::size_t next,
                     double alpha, double gamma, DoubleQSide side = DoubleQSide::Both);

}  // namespace n2d::agents
