#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "n2d/numerics/graph.hpp"
#include "n2d/numerics/params.hpp"
#include "n2d/numerics/tensor.hpp"

namespace n2d::num {

struct LayerSpec {
  enum class Kind { Dense, Conv };
  Kind kind = Kind::Dense;
  std::size_t units = 0;  // output features (dense) or channels (conv)
  std::size_t kernel = 0;
  std::size_t stride = 1;
  bool relu = true;

  static LayerSpec dense(std::size_t units, bool relu = true) {
    return {Kind::Dense, units, 0, 1, relu};
  }
  static LayerSpec conv(std::size_t channels, std::size_t kernel, std::size_t stride) {
    return {Kind::Conv, channels, kernel, stride, true};
  }
};

/// Layer stack applied to per-sample inputs of `input_shape`. A rank-3 input
/// shape ([C,H,W]) allows leading conv layers; the first dense layer
/// flattens implicitly.
struct NetworkSpec {
  Shape input_shape;
  std::vector<LayerSpec> layers;
};

/// Nodes recorded by one forward pass.
struct ForwardPass {
  Graph graph;
  Graph::Node input = 0;
  std::vector<Graph::Node> activations;  // one per layer
  Graph::Node output = 0;

  const Tensor& output_value() const { return graph.value(output); }
};

class Network {
 public:
  /// Weights uniform in [-1/sqrt(fan_in), 1/sqrt(fan_in)], biases likewise.
  Network(NetworkSpec spec, std::uint64_t seed);

  const NetworkSpec& spec() const { return spec_; }
  ParamSet& params() { return params_; }
  const ParamSet& params() const { return params_; }

  /// Per-sample output shape.
  const Shape& output_shape() const { return output_shape_; }
  std::size_t output_size() const { return shape_size(output_shape_); }

  /// `batch` is [B, input_shape...] or a single unbatched sample. Records the
  /// graph for a later backward; rejects mismatched shapes with
  /// std::invalid_argument.
  ForwardPass forward(const Tensor& batch);

  /// Forward without gradient bookkeeping. Returns [B, output].
  Tensor predict(const Tensor& batch) const;

 private:
  Tensor as_batch(const Tensor& batch) const;

  NetworkSpec spec_;
  ParamSet params_;
  Shape output_shape_;
};

}  // namespace n2d::num
