#pragma once

#include <cstddef>
#include <vector>

#include "n2d/numerics/params.hpp"
#include "n2d/numerics/tensor.hpp"

namespace n2d::num {

/// Reverse-mode tape. Nodes are appended in evaluation order, so walking
/// them backwards is a valid topological order for gradient propagation.
///
/// Layouts: dense inputs are [batch, features]; convolution inputs are
/// [batch, channels, height, width] with weights [out, in, k, k].
class Graph {
 public:
  using Node = std::size_t;

  Node input(Tensor value);
  /// References parameter `index` of `params`; gradients accumulate there.
  Node param(ParamSet& params, std::size_t index);

  /// x W^T + b with x [B, in], W [out, in], b [out].
  Node affine(Node x, Node w, Node b);
  Node relu(Node x);
  /// Valid (unpadded) 2-D convolution.
  Node conv2d(Node x, Node w, Node b, std::size_t stride);
  /// [B, ...] -> [B, prod(...)]
  Node flatten(Node x);
  /// out[i] = x[i, columns[i]] for x [B, A].
  Node pick(Node x, std::vector<std::size_t> columns);
  /// mean_i (pred[i] - target[i])^2 -> scalar.
  Node mse(Node pred, Tensor target);
  /// Sum of all entries -> scalar.
  Node sum(Node x);

  const Tensor& value(Node n) const;
  const Tensor& grad(Node n) const { return nodes_.at(n).grad; }
  std::size_t size() const { return nodes_.size(); }

  /// Back-propagates from a scalar terminal node.
  void backward(Node terminal, double seed = 1.0);
  /// Back-propagates an arbitrary upstream gradient into node `from`.
  void backward(Node from, const Tensor& seed);

 private:
  enum class Op { Input, Param, Affine, Relu, Conv2d, Flatten, Pick, Mse, Sum };

  struct NodeData {
    Op op = Op::Input;
    Tensor value;
    Tensor grad;
    std::vector<Node> args;
    ParamSet* params = nullptr;
    std::size_t param_index = 0;
    std::size_t stride = 1;
    std::vector<std::size_t> columns;
    Tensor aux;
  };

  Node push(NodeData node);
  void propagate(Node from);
  void ensure_grad(Node n);

  std::vector<NodeData> nodes_;
};

}  // namespace n2d::num
