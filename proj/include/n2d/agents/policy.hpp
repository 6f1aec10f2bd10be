#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "n2d/numerics/tensor.hpp"

namespace n2d::agents {

/// Index of the largest entry; the lowest index wins ties.
std::size_t argmax(std::span<const double> q);

/// Draws u ~ U[0,1); if u < eps a uniform action, else argmax(q). Exactly one
/// uniform draw is consumed, plus one integer draw when exploring.
std::size_t epsilon_greedy(std::span<const double> q, double eps, std::mt19937_64& rng);

/// Linear decay from `start` to `end` over `horizon` steps, flat after.
struct EpsilonSchedule {
  double start = 1.0;
  double end = 0.01;
  std::size_t horizon = 50000;

  double at(std::size_t step) const;
};

/// lambda(t) = 1 - t/CS for t < CS, else 0. CS = 0 gives lambda == 0.
struct LambdaSchedule {
  std::size_t change_step = 30000;
};

double lambda_weight(const LambdaSchedule& schedule, std::size_t t);

/// lam * q_nec + (1 - lam) * q_dqn, computed as q_dqn + lam (q_nec - q_dqn)
/// so identical inputs blend to themselves exactly. lam == 0 returns q_dqn
/// without touching q_nec (which may then be absent); lam == 1 returns q_nec.
std::vector<double> q_n2d(std::optional<std::span<const double>> q_nec, std::span<const double> q_dqn,
                          double lam);

/// r + gamma max_a Q(s', a; target)
double dqn_target(double r, std::span<const double> q_next_target, double gamma);

/// r + gamma Q(s', argmax_a Q(s', a; online); target)
double double_dqn_target(double r, std::span<const double> q_next_online,
                         std::span<const double> q_next_target, double gamma);

}  // namespace n2d::agents
