#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "alif/filter.hpp"
#include "alif/length_function.hpp"
#include "alif/matrices.hpp"
#include "alif/rational.hpp"

namespace alif {

using RationalNode = BasicNode<Rational>;
using RationalMatrix3 = std::array<std::array<Rational, 3>, 3>;

/// Filter nodes on [0, 1]: (0, 21/10), the eleven prescribed interior
/// conditions, and (1, 0).
std::vector<RationalNode> counterexample_filter_nodes();

/// L at x = 0, 1/2, 1: 3, 105/19, 30/7.
std::array<Rational, 3> counterexample_lengths();

/// The target 3x3 matrix with decimal entries written as exact rationals.
RationalMatrix3 counterexample_target();

/// K_3 recomputed from the rational nodes and lengths, no rounding anywhere.
RationalMatrix3 counterexample_exact_K3();

Rational determinant(const RationalMatrix3& m);

struct CounterexampleBundle {
  Filter filter_raw;
  Filter filter_normalized;
  LengthFunction length;
  IterationMatrix K3;
};

/// Step breakpoints are placed at 1/4 and 3/4.
CounterexampleBundle build_counterexample();

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct CounterexampleReport {
  std::vector<CheckResult> checks;
  double l1_mass = 0.0;
  double min_eigenvalue = 0.0;
  double rho_iteration = 0.0;
  double determinant = 0.0;
  double growth_rate = 0.0;  ///< per-step log growth of the diverging sift
  std::uint64_t seed = 0;

  bool passed() const;
};

inline constexpr double kExpectedDeterminant = -0.00081;
inline constexpr double kExpectedMinEigenvalue = -0.0018;
inline constexpr double kExpectedRho = 1.0018;
inline constexpr double kEigenTolerance = 2e-4;

CounterexampleReport verify_counterexample(const CounterexampleBundle& b,
                                           std::uint64_t seed = 42);

/// ||(I - K_3)^m r||_2 for m = 1..m_iters, with r the seeded random vector.
std::vector<double> scaled_counterexample(const CounterexampleBundle& b, std::size_t m_iters,
                                          std::uint64_t seed = 42);

/// Same, starting from an explicit vector.
std::vector<double> scaled_counterexample(const CounterexampleBundle& b, std::size_t m_iters,
                                          std::span<const double> start);

/// log(norms[to-1] / norms[from-1]) / (to - from), using 1-based iteration counts.
double log_growth_rate(std::span<const double> norms, std::size_t from, std::size_t to);

}  // namespace alif
