#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "n2d/numerics/tensor.hpp"

namespace n2d::num {

struct Parameter {
  std::string name;
  Tensor value;
  Tensor grad;
  Tensor sq_avg;  // RMSProp running average of squared gradients
  bool has_grad = false;
};

/// Named trainable tensors with their gradients and optimizer state.
class ParamSet {
 public:
  std::size_t add(std::string name, Tensor value);

  std::size_t size() const { return params_.size(); }
  Parameter& operator[](std::size_t i) { return params_[i]; }
  const Parameter& operator[](std::size_t i) const { return params_[i]; }
  auto begin() { return params_.begin(); }
  auto end() { return params_.end(); }
  auto begin() const { return params_.begin(); }
  auto end() const { return params_.end(); }

  /// Adds `g` into the gradient of parameter `i` and marks it populated.
  void accumulate_grad(std::size_t i, std::span<const double> g);
  void zero_grad();
  bool all_grads_populated() const;

  /// Copies parameter values only; optimizer state and gradients are untouched.
  void copy_values_from(const ParamSet& other);

  std::size_t scalar_count() const;

 private:
  std::vector<Parameter> params_;
};

/// RMSProp step over every parameter:
///   sq_avg <- decay * sq_avg + (1 - decay) * g^2
///   value  <- value - lr * g / (sqrt(sq_avg) + eps)
/// Gradients are cleared afterwards. Throws ContractViolation when any
/// parameter has no populated gradient.
void rmsprop_step(ParamSet& params, double lr, double decay, double eps);

struct RmsPropConfig {
  double lr = 1e-3;
  double decay = 0.95;
  double eps = 0.01;
};

inline void rmsprop_step(ParamSet& params, const RmsPropConfig& cfg) {
  rmsprop_step(params, cfg.lr, cfg.decay, cfg.eps);
}

/// Text snapshot, one block per parameter:
///   param <name> <rank> <d0> ... <d{rank-1}>
///   <row-major values separated by spaces, %.17g>
/// preceded by a single "n2d-params 1 <count>" header line.
void write_params(std::ostream& out, const ParamSet& params);
/// Reads values into an already-shaped ParamSet; names and shapes must match.
void read_params(std::istream& in, ParamSet& params);

}  // namespace n2d::num
