#include "alif/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "alif/matrices.hpp"

namespace alif {

Symbol::Symbol(Filter filter, LengthFunction length)
    : filter_(std::move(filter)), length_(std::move(length)), max_shift_(band_halfwidth(length_)) {}

double f_p(const Symbol& sym, std::ptrdiff_t p, double x) {
  return shift_coefficient(sym.filter(), sym.length()(x), p);
}

double eval_symbol(const Symbol& sym, double x, double theta, std::optional<std::size_t> truncation) {
  const double l = sym.length()(x);
  const std::size_t top = std::min(truncation.value_or(sym.max_shift()), sym.max_shift());
  double acc = 0.0;
  for (std::size_t p = top; p >= 1; --p) {
    acc += shift_coefficient(sym.filter(), l, static_cast<std::ptrdiff_t>(p)) *
           std::cos(static_cast<double>(p) * theta);
  }
  return shift_coefficient(sym.filter(), l, 0) + 2.0 * acc;
}

std::complex<double> eval_symbol_exponential(const Symbol& sym, double x, double theta,
                                             std::optional<std::size_t> truncation) {
  const double l = sym.length()(x);
  const auto top = static_cast<std::ptrdiff_t>(std::min(truncation.value_or(sym.max_shift()), sym.max_shift()));
  std::complex<double> acc = 0.0;
  for (std::ptrdiff_t p = -top; p <= top; ++p) {
    acc += shift_coefficient(sym.filter(), l, p) *
           std::polar(1.0, static_cast<double>(p) * theta);
  }
  return acc;
}

SymbolRange symbol_range(const Symbol& sym, std::size_t nx, std::size_t ntheta) {
  if (nx < 2 || ntheta < 2) throw std::invalid_argument("symbol_range: grids need at least 2 points");
  SymbolRange r;
  r.min = HUGE_VAL;
  r.max = -HUGE_VAL;
  for (std::size_t i = 0; i < nx; ++i) {
    const double x = grid_point(i, nx);
    for (std::size_t j = 0; j < ntheta; ++j) {
      const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(j) /
                                                   static_cast<double>(ntheta - 1);
      const double v = eval_symbol(sym, x, theta);
      if (v < r.min) {
        r.min = v;
        r.argmin = {x, theta};
      }
      if (v > r.max) {
        r.max = v;
        r.argmax = {x, theta};
      }
    }
  }
  r.condition_ok = r.min >= -kSymbolConditionTolerance && r.max <= 2.0 + kSymbolConditionTolerance;
  return r;
}

std::vector<double> sample_symbol(const Symbol& sym, std::size_t n) {
  std::vector<double> out;
  if (n == 0) return out;
  const auto n1 = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n)))));
  const std::size_t n2 = (n + n1 - 1) / n1;
  out.reserve(n);
  for (std::size_t i = 0; i < n1 && out.size() < n; ++i) {
    const double x = (static_cast<double>(i) + 0.5) / static_cast<double>(n1);
    for (std::size_t j = 0; j < n2 && out.size() < n; ++j) {
      const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.5) /
                                                   static_cast<double>(n2);
      out.push_back(eval_symbol(sym, x, theta));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::array<std::vector<Rational>, 3> f123_cosine_coefficients() {
  return {{
      {ratio(7, 10), ratio(24, 25), ratio(3, 10)},
      {ratio(19, 50), ratio(17, 25), ratio(62, 125), ratio(36, 125), ratio(31, 250), ratio(4, 125)},
      {ratio(49, 100), ratio(41, 50), ratio(12, 25), ratio(9, 50), ratio(3, 100)},
  }};
}

std::array<double, 3> f123_polynomials(double theta) {
  static const auto coeffs = [] {
    std::array<std::vector<double>, 3> c;
    const auto exact = f123_cosine_coefficients();
    for (std::size_t k = 0; k < 3; ++k)
      for (const auto& q : exact[k]) c[k].push_back(to_double(q));
    return c;
  }();
  std::array<double, 3> out{};
  for (std::size_t k = 0; k < 3; ++k) {
    double acc = 0.0;
    for (std::size_t p = coeffs[k].size() - 1; p >= 1; --p)
      acc += coeffs[k][p] * std::cos(static_cast<double>(p) * theta);
    out[k] = coeffs[k][0] + acc;
  }
  return out;
}

}  // namespace alif
