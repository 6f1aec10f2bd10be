#pragma once

#include <deque>
#include <span>

#include "n2d/numerics/tensor.hpp"

namespace n2d::envs {

/// Collapses a [P, H, W] image in [0, 255] to a [H, W] grayscale frame in
/// [0, 1]: the plane-weighted mean, divided by 255. Throws
/// num::ContractViolation if the shape or weights don't line up.
num::Tensor preprocess(const num::Tensor& obs, std::span<const double> plane_weights,
                       const num::Shape& expected_shape);

/// Sliding window over the last `depth` preprocessed frames.
class FrameStack {
 public:
  explicit FrameStack(num::Shape frame_shape, std::size_t depth = 4);

  /// Clears the window to zeros, then pushes `first`.
  num::Tensor reset(const num::Tensor& first);
  /// Drops the oldest frame, appends `frame`, returns [depth, H, W] oldest first.
  num::Tensor push(const num::Tensor& frame);
  num::Tensor current() const;

  std::size_t depth() const { return depth_; }
  num::Shape stacked_shape() const;

 private:
  num::Shape frame_shape_;
  std::size_t depth_;
  std::deque<num::Tensor> frames_;
};

}  // namespace n2d::envs
