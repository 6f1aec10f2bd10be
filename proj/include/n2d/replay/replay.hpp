#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "n2d/numerics/tensor.hpp"

namespace n2d::replay {

/// One (s_t, a_t, r_t) entry of an episode log.
struct Step {
  num::Tensor state;
  std::size_t action = 0;
  double reward = 0.0;
};

/// Append-only per-episode log, cleared at episode start.
class Trajectory {
 public:
  void append(num::Tensor state, std::size_t action, double reward);
  void clear() { steps_.clear(); }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  const Step& operator[](std::size_t t) const { return steps_.at(t); }
  auto begin() const { return steps_.begin(); }
  auto end() const { return steps_.end(); }

 private:
  std::vector<Step> steps_;
};

/// Stored (s_t, a_t, y_t).
struct TransitionRecord {
  num::Tensor state;
  std::size_t action = 0;
  double target = 0.0;
};

/// (s, a, r, s', done) for the one-step baselines.
struct OneStepTransition {
  num::Tensor state;
  std::size_t action = 0;
  double reward = 0.0;
  num::Tensor next_state;
  bool done = false;
};

/// Fixed-capacity ring; once full, each append overwrites the oldest record.
template <class Record>
class RingBuffer {
 public:
  explicit RingBuffer(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) throw num::ContractViolation("replay capacity must be positive");
    records_.reserve(std::min<std::size_t>(capacity, 4096));
  }

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  void append(Record rec) {
    if (records_.size() < capacity_) {
      records_.push_back(std::move(rec));
    } else {
      records_[head_] = std::move(rec);
      head_ = (head_ + 1) % capacity_;
    }
  }

  /// i-th surviving record in insertion order (0 = oldest).
  const Record& operator[](std::size_t i) const {
    if (i >= records_.size()) throw std::out_of_range("replay index");
    return records_[(head_ + i) % records_.size()];
  }

  /// Uniform draws with replacement; std::nullopt when fewer than `count`
  /// records are stored.
  std::optional<std::vector<const Record*>> sample(std::size_t count,
                                                   std::mt19937_64& rng) const {
    if (count == 0) throw num::ContractViolation("minibatch size must be positive");
    if (records_.size() < count) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, records_.size() - 1);
    std::vector<const Record*> batch;
    batch.reserve(count);
    for (std::size_t i = 0; i < count; ++i) batch.push_back(&records_[pick(rng)]);
    return batch;
  }

 private:
  std::size_t capacity_;
  std::size_t head_ = 0;
  std::vector<Record> records_;
};

using ReplayBuffer = RingBuffer<TransitionRecord>;
using OneStepBuffer = RingBuffer<OneStepTransition>;

/// Per-action values for a stored state.
using BootstrapFn = std::function<std::vector<double>(const num::Tensor& state)>;

/// y_t = sum_{j<m} gamma^j r_{t+j} + [t+N < T] gamma^N max_a bootstrap(s_{t+N})_a
/// with m = min(N, T - t). The bootstrap term is dropped once the lookahead
/// reaches the end of the episode. `bootstrap` is only called on states that
/// are actually needed.
std::vector<double> n_step_targets(const Trajectory& traj, std::size_t n, double gamma,
                                   const BootstrapFn& bootstrap);

/// Same recursion from plain rewards, with `bootstrap_max[k]` standing for
/// max_a Q(s_k, a). Entries the recursion does not read may hold anything.
std::vector<double> n_step_targets(std::span<const double> rewards,
                                   std::span<const double> bootstrap_max, std::size_t n,
                                   double gamma);

/// Indices k whose bootstrap value the N-step recursion needs.
std::vector<std::size_t> bootstrap_indices(std::size_t length, std::size_t n);

/// Text snapshot, oldest record first:
///   n2d-replay 1 <capacity> <size>
///   per record: <action> <target> <rank> <dims...> <values...>
void save(std::ostream& out, const ReplayBuffer& buffer);
ReplayBuffer load_replay(std::istream& in);

/// Same idea for one-step transitions:
///   n2d-onestep 1 <capacity> <size>
///   per record: <action> <reward> <done> <state> <next_state>, each tensor
///   written as <rank> <dims...> <values...>
void save(std::ostream& out, const OneStepBuffer& buffer);
OneStepBuffer load_one_step(std::istream& in);

}  // namespace n2d::replay
