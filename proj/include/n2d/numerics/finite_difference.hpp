#pragma once

#include <functional>
#include <span>
#include <vector>

#include "n2d/numerics/params.hpp"
#include "n2d/numerics/tensor.hpp"

namespace n2d::num {

/// Central-difference gradient of `loss` with respect to every parameter
/// entry. Each entry is perturbed by +-step in place and restored exactly.
std::vector<Tensor> finite_difference_grad(ParamSet& params, const std::function<double()>& loss,
                                           double step);

/// Central-difference gradient of a function of a flat vector.
std::vector<double> finite_difference_grad(std::span<const double> point,
                                           const std::function<double(std::span<const double>)>& f,
                                           double step);

/// max_k |a_k - b_k| / max(|a_k|, |b_k|, floor)
double max_relative_error(std::span<const double> a, std::span<const double> b,
                          double floor = 1e-8);

}  // namespace n2d::num
