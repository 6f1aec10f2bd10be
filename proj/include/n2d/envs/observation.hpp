#pragma once

#include <optional>

#include "n2d/envs/env.hpp"
#include "n2d/envs/preprocess.hpp"

namespace n2d::envs {

/// What an agent sees: the stacked, normalized frames plus the discrete
/// state id when the environment has one.
struct Observation {
  num::Tensor frames;  // [depth, H, W] in [0, 1]
  std::optional<std::size_t> index;
};

/// Raw env image -> grayscale -> frame stack.
class ObservationPipeline {
 public:
  explicit ObservationPipeline(const Environment& env, std::size_t depth = 4);

  Observation reset(Environment& env);
  /// Steps `env` and converts the resulting observation.
  Observation step(Environment& env, std::size_t action, double& reward, bool& done);

  num::Shape stacked_shape() const { return stack_.stacked_shape(); }

 private:
  Observation convert(const Environment& env, const num::Tensor& raw, bool first);

  num::Shape raw_shape_;
  std::vector<double> weights_;
  FrameStack stack_;
};

}  // namespace n2d::envs
