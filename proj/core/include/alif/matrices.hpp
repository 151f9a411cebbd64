#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "alif/filter.hpp"
#include "alif/length_function.hpp"

namespace alif {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

/// Sampling point x_i = i / (n - 1).
inline double grid_point(std::size_t i, std::size_t n) {
  return static_cast<double>(i) / static_cast<double>(n - 1);
}

/// ALIF iteration matrix K_n with (i, j) entry k((i-j)/L(x_i)) / L(x_i).
///
/// Stored dense; entries with |i - j| > band_halfwidth() are zero.
/// Keeps the filter and length function it was built from.
class IterationMatrix {
 public:
  IterationMatrix(Matrix entries, std::size_t band_halfwidth, Filter filter, LengthFunction length);

  std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  std::size_t band_halfwidth() const { return band_; }
  const Filter& filter() const { return filter_; }
  const LengthFunction& length() const { return length_; }

  /// K x, touching only the band.
  std::vector<double> apply(std::span<const double> x) const;

 private:
  Matrix entries_;
  std::size_t band_;
  Filter filter_;
  LengthFunction length_;
};

/// ceil(sup L): exact for constant/step/tabulated, sampled for continuous.
std::size_t band_halfwidth(const LengthFunction& length);

/// Throws std::invalid_argument for n < 2.
IterationMatrix build_K(const Filter& f, const LengthFunction& length, std::size_t n);

/// T_n with (i, j) entry coeffs[i - j] (zero when absent).
Matrix toeplitz_from_coeffs(const std::map<std::ptrdiff_t, double>& coeffs, std::size_t n);

enum class SamplingGrid {
  over_n,          ///< a(i/n), i = 1..n
  over_n_minus_1,  ///< a(i/(n-1)), i = 0..n-1
};

/// Diagonal matrix of samples of `a` on the chosen grid.
Matrix diag_sampling(const std::function<double(double)>& a, std::size_t n, SamplingGrid grid);

struct FactorTerm {
  std::ptrdiff_t shift;
  std::vector<double> diagonal;  ///< f_shift(x_i), i = 0..n-1
};

/// K_n = sum_p diag(f_p(x_i)) T_n(e^{i p theta}).
struct Factorization {
  std::size_t n = 0;
  std::ptrdiff_t max_shift = 0;
  std::vector<FactorTerm> terms;  ///< shifts -max_shift..max_shift in order

  const FactorTerm* term(std::ptrdiff_t shift) const;
  /// Sum of the terms with |shift| <= max_abs_shift.
  Matrix reconstruct(std::ptrdiff_t max_abs_shift) const;
  Matrix reconstruct() const { return reconstruct(max_shift); }
};

Factorization factorize_K(const Filter& f, const LengthFunction& length, std::size_t n);

/// K_{n,m}: build_K with every entry |i - j| > m zeroed.
Matrix build_K_truncated(const Filter& f, const LengthFunction& length, std::size_t n, std::size_t m);

}  // namespace alif
