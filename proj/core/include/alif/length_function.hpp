#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "alif/filter.hpp"

namespace alif {

enum class LengthKind { constant, step, tabulated, continuous };

std::string to_string(LengthKind kind);

/// Strictly positive filter length L(x) on [0, 1], in grid units.
///
/// Step functions are right-continuous at their breakpoints. Tabulated
/// functions interpolate linearly between nodes and are clamped to the end
/// values outside the node range.
class LengthFunction {
 public:
  using Evaluable = std::function<double(double)>;

  double operator()(double x) const { return evaluate(x); }
  double evaluate(double x) const;

  LengthKind kind() const { return kind_; }
  double lower_bound() const { return lower_; }
  double upper_bound() const { return upper_; }

  std::span<const double> breakpoints() const { return breakpoints_; }
  /// Step values, or the single constant.
  std::span<const double> values() const { return values_; }
  std::span<const Node> nodes() const { return nodes_; }

  friend LengthFunction make_constant_length(double c);
  friend LengthFunction make_step_length(std::span<const double> breakpoints,
                                         std::span<const double> values);
  friend LengthFunction make_tabulated_length(std::span<const Node> nodes);
  friend LengthFunction make_continuous_length(Evaluable fn);

 private:
  LengthFunction() = default;

  LengthKind kind_ = LengthKind::constant;
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  std::vector<Node> nodes_;
  Evaluable fn_;
  double lower_ = 0.0;
  double upper_ = 0.0;
};

/// L(x) = c. Throws std::invalid_argument unless c > 0.
LengthFunction make_constant_length(double c);

/// L(x) = values[i] on [breakpoints[i-1], breakpoints[i]).
/// Requires values.size() == breakpoints.size() + 1, strictly increasing
/// breakpoints in (0, 1) and positive values.
LengthFunction make_step_length(std::span<const double> breakpoints, std::span<const double> values);

/// Piecewise-linear L through (x, L) nodes with strictly increasing x in [0, 1].
LengthFunction make_tabulated_length(std::span<const Node> nodes);

/// Arbitrary evaluable. Bounds come from 10001 samples; the sampled minimum
/// must be positive.
LengthFunction make_continuous_length(LengthFunction::Evaluable fn);

/// Length from the local extrema spacing of `signal`.
///
/// For each sample i the enclosing pair of consecutive extrema (or the first
/// or last pair outside their range) gives a spacing d_i; the result is the
/// tabulated function through (i/(n-1), max(1, multiplier * d_i)).
/// Throws std::invalid_argument when the signal has fewer than two extrema.
LengthFunction extrema_based_length(std::span<const double> signal, double multiplier);

}  // namespace alif
