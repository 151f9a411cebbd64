#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "alif/filter.hpp"
#include "alif/length_function.hpp"
#include "alif/rational.hpp"

namespace alif {

/// Spectral symbol kappa(x, theta) = sum_p f_p(x) e^{i p theta} with
/// f_p(x) = k(p / L(x)) / L(x).
class Symbol {
 public:
  Symbol(Filter filter, LengthFunction length);

  const Filter& filter() const { return filter_; }
  const LengthFunction& length() const { return length_; }
  /// ceil(sup L); f_p vanishes for |p| beyond it.
  std::size_t max_shift() const { return max_shift_; }

 private:
  Filter filter_;
  LengthFunction length_;
  std::size_t max_shift_;
};

double f_p(const Symbol& sym, std::ptrdiff_t p, double x);

/// Cosine form f_0 + 2 sum_{p=1}^{min(m, max_shift)} f_p cos(p theta).
double eval_symbol(const Symbol& sym, double x, double theta,
                   std::optional<std::size_t> truncation = std::nullopt);

/// Same sum written with complex exponentials over p = -M..M.
std::complex<double> eval_symbol_exponential(const Symbol& sym, double x, double theta,
                                             std::optional<std::size_t> truncation = std::nullopt);

struct GridPoint {
  double x = 0.0;
  double theta = 0.0;
};

struct SymbolRange {
  double min = 0.0;
  double max = 0.0;
  GridPoint argmin;
  GridPoint argmax;
  bool condition_ok = false;  ///< 0 <= kappa <= 2 within 1e-12
};

inline constexpr double kSymbolConditionTolerance = 1e-12;

/// Extrema of kappa over {i/(nx-1)} x {-pi + 2 pi j/(ntheta-1)}.
/// Throws std::invalid_argument unless nx, ntheta >= 2.
SymbolRange symbol_range(const Symbol& sym, std::size_t nx, std::size_t ntheta);

/// n samples of kappa from a cell-centred n1 x n2 grid of [0,1] x [-pi,pi]
/// (n1 = round(sqrt n), n2 = ceil(n / n1)), taken in row-major order and
/// sorted ascending.
std::vector<double> sample_symbol(const Symbol& sym, std::size_t n);

/// The three nonnegative cosine polynomials whose coefficients form the rows
/// of the 3x3 counterexample matrix, evaluated at theta.
std::array<double, 3> f123_polynomials(double theta);

/// Cosine coefficients c_0..c_d of f_1, f_2, f_3 as exact rationals, with
/// f(theta) = sum_p c_p cos(p theta).
std::array<std::vector<Rational>, 3> f123_cosine_coefficients();

}  // namespace alif
