#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace alif {

/// A node (abscissa, value) of a piecewise-linear profile on [0, 1].
template <typename T>
struct BasicNode {
  T x;
  T value;
};

using Node = BasicNode<double>;

/// Evaluates the even piecewise-linear profile through `nodes` at y.
///
/// `nodes` must be sorted by abscissa, start at 0 and end at 1. The profile
/// is mirrored for negative arguments and vanishes for |y| >= 1. Works for
/// any ordered field, so the same routine serves the floating-point filter
/// and the exact rational reproduction.
template <typename T>
T interpolate_even_pwl(std::span<const BasicNode<T>> nodes, T y) {
  if (y < T(0)) y = -y;
  if (!(y < T(1))) return T(0);
  auto hi = std::upper_bound(nodes.begin(), nodes.end(), y,
                             [](const T& v, const BasicNode<T>& n) { return v < n.x; });
  const auto& left = *(hi - 1);
  if (left.x == y) return left.value;
  const auto& right = *hi;
  return left.value + (right.value - left.value) * (y - left.x) / (right.x - left.x);
}

enum class FilterKind { uniform, triangular, piecewise_linear, custom };

std::string to_string(FilterKind kind);

/// Even, nonnegative filter supported on [-1, 1].
///
/// Immutable once built. Evaluation outside [-1, 1] returns 0. A filter is
/// "normalized" when its L1 mass is within 1e-6 of one.
class Filter {
 public:
  using Evaluable = std::function<double(double)>;

  double operator()(double y) const { return evaluate(y); }
  double evaluate(double y) const;

  double sup_abs() const { return sup_abs_; }
  double l1_mass() const { return l1_mass_; }
  bool normalized() const { return std::abs(l1_mass_ - 1.0) <= 1e-6; }

  FilterKind kind() const { return kind_; }
  /// Multiplier applied on top of the base profile (1 unless rescaled).
  double scale() const { return scale_; }
  /// Full node list on [0, 1] for piecewise-linear filters; empty otherwise.
  std::span<const Node> nodes() const { return nodes_; }

  friend Filter make_uniform_filter();
  friend Filter make_triangular_filter();
  friend Filter make_pwl_filter(std::span<const Node> nodes);
  friend Filter make_custom_filter(Evaluable profile);
  friend Filter normalize_filter(const Filter& f);
  friend Filter scale_filter(const Filter& f, double factor);

 private:
  Filter() = default;
  double base(double y) const;

  FilterKind kind_ = FilterKind::uniform;
  std::vector<Node> nodes_;
  Evaluable custom_;
  double scale_ = 1.0;
  double sup_abs_ = 0.0;
  double l1_mass_ = 0.0;
};

/// Indicator of [-1/2, 1/2].
Filter make_uniform_filter();

/// max(1 - |y|, 0).
Filter make_triangular_filter();

/// Even extension of the linear interpolant through (0, v0), `nodes` and
/// (1, 0). When abscissa 0 is absent, v0 is the first node's value.
/// Throws std::invalid_argument on an empty list, abscissas outside [0, 1]
/// or not strictly increasing, negative values, or a nonzero value at 1.
Filter make_pwl_filter(std::span<const Node> nodes);

/// Wraps an arbitrary profile. Only |y| < 1 is ever queried and the result is
/// symmetrised through |y|; mass and sup come from a 10001-point trapezoid.
Filter make_custom_filter(Filter::Evaluable profile);

/// k / ||k||_1. Throws std::invalid_argument for a zero-mass filter.
Filter normalize_filter(const Filter& f);

/// factor * k for factor > 0.
Filter scale_filter(const Filter& f, double factor);

struct ValidationReport {
  bool even = false;
  bool nonnegative = false;
  bool supported = false;
  bool normalized = false;

  bool ok() const { return even && nonnegative && supported && normalized; }
};

/// Checks the filter axioms on 10001 equispaced points of [-1, 1], plus the
/// support condition just outside it.
ValidationReport validate_filter(const Filter& f, double tol);

/// f_p for a single row: k(p / length) / length.
inline double shift_coefficient(const Filter& k, double length, std::ptrdiff_t p) {
  return k(static_cast<double>(p) / length) / length;
}

}  // namespace alif
