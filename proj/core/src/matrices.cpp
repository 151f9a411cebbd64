#include "alif/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace alif {
namespace {

std::size_t row_reach(double length, std::size_t n) {
  const double r = std::floor(length);
  return r >= static_cast<double>(n - 1) ? n - 1 : static_cast<std::size_t>(r);
}

}  // namespace

IterationMatrix::IterationMatrix(Matrix entries, std::size_t band_halfwidth, Filter filter,
                                 LengthFunction length)
    : entries_(std::move(entries)),
      band_(band_halfwidth),
      filter_(std::move(filter)),
      length_(std::move(length)) {
  if (entries_.rows() != entries_.cols()) throw std::invalid_argument("IterationMatrix: not square");
}

std::vector<double> IterationMatrix::apply(std::span<const double> x) const {
  const std::size_t n = size();
  if (x.size() != n) throw std::invalid_argument("IterationMatrix::apply: size mismatch");
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i > band_ ? i - band_ : 0;
    const std::size_t hi = std::min(n - 1, i + band_);
    const double* row = entries_.data() + i * n;
    double acc = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

std::size_t band_halfwidth(const LengthFunction& length) {
  return static_cast<std::size_t>(std::ceil(length.upper_bound()));
}

IterationMatrix build_K(const Filter& f, const LengthFunction& length, std::size_t n) {
  if (n < 2) throw std::invalid_argument("build_K: n must be at least 2");
  Matrix k = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::size_t band = band_halfwidth(length);
  for (std::size_t i = 0; i < n; ++i) {
    const double li = length(grid_point(i, n));
    band = std::max(band, static_cast<std::size_t>(std::ceil(li)));
    const std::size_t reach = row_reach(li, n);
    const std::size_t lo = i > reach ? i - reach : 0;
    const std::size_t hi = std::min(n - 1, i + reach);
    for (std::size_t j = lo; j <= hi; ++j) {
      const auto p = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(j);
      k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = shift_coefficient(f, li, p);
    }
  }
  return IterationMatrix(std::move(k), band, f, length);
}

Matrix toeplitz_from_coeffs(const std::map<std::ptrdiff_t, double>& coeffs, std::size_t n) {
  const auto size = static_cast<Eigen::Index>(n);
  Matrix t = Matrix::Zero(size, size);
  for (const auto& [shift, value] : coeffs) {
    for (Eigen::Index i = 0; i < size; ++i) {
      const Eigen::Index j = i - shift;
      if (j >= 0 && j < size) t(i, j) = value;
    }
  }
  return t;
}

Matrix diag_sampling(const std::function<double(double)>& a, std::size_t n, SamplingGrid grid) {
  if (grid == SamplingGrid::over_n_minus_1 && n < 2)
    throw std::invalid_argument("diag_sampling: grid i/(n-1) needs n >= 2");
  const auto size = static_cast<Eigen::Index>(n);
  Matrix d = Matrix::Zero(size, size);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid == SamplingGrid::over_n
                         ? static_cast<double>(i + 1) / static_cast<double>(n)
                         : grid_point(i, n);
    d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = a(x);
  }
  return d;
}

const FactorTerm* Factorization::term(std::ptrdiff_t shift) const {
  if (shift < -max_shift || shift > max_shift) return nullptr;
  return &terms[static_cast<std::size_t>(shift + max_shift)];
}

Matrix Factorization::reconstruct(std::ptrdiff_t max_abs_shift) const {
  const auto size = static_cast<Eigen::Index>(n);
  Matrix k = Matrix::Zero(size, size);
  for (const auto& t : terms) {
    if (std::abs(t.shift) > max_abs_shift) continue;
    // diag(d) T_n(e^{i p theta}) puts d_i at (i, i - p)
    for (Eigen::Index i = 0; i < size; ++i) {
      const Eigen::Index j = i - t.shift;
      if (j >= 0 && j < size) k(i, j) += t.diagonal[static_cast<std::size_t>(i)];
    }
  }
  return k;
}

Factorization factorize_K(const Filter& f, const LengthFunction& length, std::size_t n) {
  if (n < 2) throw std::invalid_argument("factorize_K: n must be at least 2");
  std::vector<double> lengths(n);
  std::size_t band = band_halfwidth(length);
  for (std::size_t i = 0; i < n; ++i) {
    lengths[i] = length(grid_point(i, n));
    band = std::max(band, static_cast<std::size_t>(std::ceil(lengths[i])));
  }

  Factorization out;
  out.n = n;
  out.max_shift = static_cast<std::ptrdiff_t>(band);
  for (std::ptrdiff_t p = -out.max_shift; p <= out.max_shift; ++p) {
    FactorTerm term{p, std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) term.diagonal[i] = shift_coefficient(f, lengths[i], p);
    out.terms.push_back(std::move(term));
  }
  return out;
}

Matrix build_K_truncated(const Filter& f, const LengthFunction& length, std::size_t n, std::size_t m) {
  Matrix k = build_K(f, length, n).entries();
  const auto size = static_cast<Eigen::Index>(n);
  const auto width = static_cast<Eigen::Index>(m);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      if (std::abs(i - j) > width) k(i, j) = 0.0;
    }
  }
  return k;
}

}  // namespace alif
