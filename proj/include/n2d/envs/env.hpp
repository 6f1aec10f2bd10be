#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "n2d/numerics/tensor.hpp"

namespace n2d::envs {

/// Raised when an environment is driven outside its contract.
class EnvFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct StepResult {
  num::Tensor observation;
  double reward = 0.0;  // always in {-1, 0, +1}
  bool done = false;
};

/// Deterministic transition query used to build tabular oracles.
struct ModelStep {
  std::size_t next_state = 0;
  double reward = 0.0;
  bool terminal = false;
};

/// Observations are [planes, height, width] images with values in [0, 255].
class Environment {
 public:
  virtual ~Environment() = default;

  virtual num::Tensor reset() = 0;
  /// Throws EnvFault when called before reset() or after `done`.
  virtual StepResult step(std::size_t action) = 0;

  virtual std::size_t action_count() const = 0;
  virtual num::Shape observation_shape() const = 0;
  /// Per-plane grayscale weights, one per observation plane.
  virtual std::vector<double> plane_weights() const = 0;
  virtual std::size_t episode_cap() const = 0;
  virtual std::string name() const = 0;
  /// True when reset() always starts the same episode, so a fixed action
  /// sequence always yields the same observations and rewards.
  virtual bool deterministic() const { return true; }

  /// Discrete state id for tabular agents; absent for image-only tasks.
  virtual std::optional<std::size_t> state_index() const { return std::nullopt; }
  virtual std::size_t state_count() const { return 0; }
  virtual std::optional<std::size_t> start_state() const { return std::nullopt; }
  virtual std::optional<ModelStep> model(std::size_t /*state*/, std::size_t /*action*/) const {
    return std::nullopt;
  }
};

inline constexpr double kMaxPixel = 255.0;

}  // namespace n2d::envs
