#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "alif/matrices.hpp"
#include "alif/symbol.hpp"

namespace alif {

/// Raised when the eigen/singular value iteration does not converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ComplexVector = std::vector<std::complex<double>>;

/// All eigenvalues, ordered by real part then imaginary part.
/// Throws std::invalid_argument for a non-square matrix.
ComplexVector eigenvalues(const Matrix& a);

/// Eigenpairs (unordered) for residual checks on small matrices.
std::pair<ComplexVector, Eigen::MatrixXcd> eigenpairs(const Matrix& a);

/// Singular values, descending.
std::vector<double> singular_values(const Matrix& a);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// p-norm of the singular values, p in [1, inf]. Throws for p < 1.
double schatten_norm(const Matrix& a, double p);

inline constexpr double kNecessaryConditionSlack = 1e-10;

struct NecessaryCondition {
  bool ok = false;
  std::size_t worst_index = 0;  ///< index into eigenvalues() order
  double worst_value = 0.0;     ///< max |1 - lambda_i|
};

/// |1 - lambda_i| <= 1 + 1e-10 for every eigenvalue.
NecessaryCondition necessary_condition(const Matrix& a);
inline NecessaryCondition necessary_condition(const IterationMatrix& k) {
  return necessary_condition(k.entries());
}

struct SpectralReport {
  ComplexVector eigenvalues;
  std::vector<double> singular_values;
  double spectral_radius_of_iteration = 0.0;  ///< rho(I - A)
  double max_imag = 0.0;
  bool necessary_condition_ok = false;
};

SpectralReport analyze_spectrum(const Matrix& a);

struct DistributionCheck {
  std::size_t n = 0;
  double discrepancy = 0.0;  ///< mean |sorted Re lambda - sorted symbol samples|
  double max_imag = 0.0;
  double outlier_fraction = 0.0;
  double epsilon = 0.0;            ///< outlier distance used
  double test_function_gap = 0.0;  ///< max_j |mean F_j(lambda) - mean F_j(kappa)|
};

/// Compares the spectrum of `a` with samples of `sym`.
/// epsilon defaults to 0.05 times the width of the symbol's range.
DistributionCheck distribution_check(const Matrix& a, const Symbol& sym,
                                     std::optional<double> epsilon = std::nullopt);

struct TruncationError {
  double empirical = 0.0;  ///< ||K_n - K_{n,m}||_F^2 / n
  double bound = 0.0;      ///< 2 ||k||_inf^2 sum_{p=m+1}^{band} 1/p^2
};

TruncationError acs_truncation_error(const Filter& f, const LengthFunction& length, std::size_t n,
                                     std::size_t m);

/// ||A - A^T||_F / (2 sqrt n).
double hermitian_defect(const Matrix& a);

/// (n, n^{-1/p} ||Z_n||_p) for every requested size.
std::vector<std::pair<std::size_t, double>> zero_distribution_witness(
    const std::function<Matrix(std::size_t)>& builder, const std::vector<std::size_t>& sizes, double p);

/// sup - inf of |a| over (x - alpha, x + alpha) intersected with [0, 1],
/// approximated on `resolution` equispaced points.
double oscillation(const std::function<double(double)>& a, double alpha, double x,
                   std::size_t resolution = 4097);

/// ||Z_n||_F^2 / n for the correction between D'_n(a) T_n(e^{i m theta}) plus
/// its adjoint and the nearest Hermitian band matrix:
/// (1/n) sum_{j=0}^{n-m-1} (a(x_{j+m}) - a(x_j))^2. Throws for m = 0 or n <= m.
double fund_alm_her_defect(const std::function<double(double)>& a, std::size_t m, std::size_t n);

}  // namespace alif
