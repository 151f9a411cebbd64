#include "alif/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "alif/parallel.hpp"

namespace alif {
namespace {

void require_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols()) throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

Eigen::EigenSolver<Eigen::MatrixXd> solve(const Matrix& a, bool vectors) {
  require_square(a, "eigenvalues");
  Eigen::EigenSolver<Eigen::MatrixXd> solver;
  solver.setMaxIterations(50 * std::max<Eigen::Index>(a.rows(), 1));
  solver.compute(Eigen::MatrixXd(a), vectors);
  if (solver.info() != Eigen::Success) throw ConvergenceError("eigenvalues: QR iteration did not converge");
  return solver;
}

double distance_to_segment(std::complex<double> z, double lo, double hi) {
  const double dx = z.real() < lo ? lo - z.real() : (z.real() > hi ? z.real() - hi : 0.0);
  return std::hypot(dx, z.imag());
}

}  // namespace

ComplexVector eigenvalues(const Matrix& a) {
  if (a.rows() == 0) {
    require_square(a, "eigenvalues");
    return {};
  }
  const auto solver = solve(a, false);
  const auto& ev = solver.eigenvalues();
  ComplexVector out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return out;
}

std::pair<ComplexVector, Eigen::MatrixXcd> eigenpairs(const Matrix& a) {
  const auto solver = solve(a, true);
  const auto& ev = solver.eigenvalues();
  return {ComplexVector(ev.data(), ev.data() + ev.size()), solver.eigenvectors()};
}

std::vector<double> singular_values(const Matrix& a) {
  require_square(a, "singular_values");
  if (a.rows() == 0) return {};
  Eigen::BDCSVD<Eigen::MatrixXd> svd{Eigen::MatrixXd(a)};
  if (svd.info() != Eigen::Success) throw ConvergenceError("singular_values: SVD did not converge");
  const auto& s = svd.singularValues();
  std::vector<double> out(s.data(), s.data() + s.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double schatten_norm(const Matrix& a, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("schatten_norm: p must be >= 1");
  const auto s = singular_values(a);
  if (s.empty()) return 0.0;
  if (std::isinf(p)) return s.front();
  // scale by the largest value so large p cannot overflow
  const double top = s.front();
  if (top == 0.0) return 0.0;
  double acc = 0.0;
  for (double v : s) acc += std::pow(v / top, p);
  return top * std::pow(acc, 1.0 / p);
}

NecessaryCondition necessary_condition(const Matrix& a) {
  const auto ev = eigenvalues(a);
  NecessaryCondition r{true, 0, 0.0};
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const double d = std::abs(1.0 - ev[i]);
    if (d > r.worst_value || i == 0) {
      r.worst_value = d;
      r.worst_index = i;
    }
  }
  r.ok = r.worst_value <= 1.0 + kNecessaryConditionSlack;
  return r;
}

SpectralReport analyze_spectrum(const Matrix& a) {
  SpectralReport r;
  r.eigenvalues = eigenvalues(a);
  r.singular_values = singular_values(a);
  for (const auto& z : r.eigenvalues) {
    r.spectral_radius_of_iteration = std::max(r.spectral_radius_of_iteration, std::abs(1.0 - z));
    r.max_imag = std::max(r.max_imag, std::abs(z.imag()));
  }
  r.necessary_condition_ok = r.spectral_radius_of_iteration <= 1.0 + kNecessaryConditionSlack;
  return r;
}

DistributionCheck distribution_check(const Matrix& a, const Symbol& sym, std::optional<double> epsilon) {
  require_square(a, "distribution_check");
  DistributionCheck c;
  c.n = static_cast<std::size_t>(a.rows());
  if (c.n == 0) return c;

  const auto ev = eigenvalues(a);
  std::vector<double> re(ev.size());
  for (std::size_t i = 0; i < ev.size(); ++i) {
    re[i] = ev[i].real();
    c.max_imag = std::max(c.max_imag, std::abs(ev[i].imag()));
  }
  std::sort(re.begin(), re.end());
  const auto samples = sample_symbol(sym, c.n);
  double acc = 0.0;
  for (std::size_t i = 0; i < c.n; ++i) acc += std::abs(re[i] - samples[i]);
  c.discrepancy = acc / static_cast<double>(c.n);

  const auto range = symbol_range(sym, 129, 257);
  c.epsilon = epsilon.value_or(0.05 * (range.max - range.min));
  std::size_t outliers = 0;
  for (const auto& z : ev) {
    if (distance_to_segment(z, range.min, range.max) > std::max(c.epsilon, 1e-10)) ++outliers;
  }
  c.outlier_fraction = static_cast<double>(outliers) / static_cast<double>(c.n);

  // F_j(z) = exp(-j |z - c_j|^2) with centres spread over the symbol range
  constexpr int kTestFunctions = 4;
  for (int j = 1; j <= kTestFunctions; ++j) {
    const double centre = range.min + (range.max - range.min) * j / (kTestFunctions + 1);
    double spectral = 0.0;
    double symbolic = 0.0;
    for (const auto& z : ev) spectral += std::exp(-j * std::norm(z - centre));
    for (double v : samples) symbolic += std::exp(-j * (v - centre) * (v - centre));
    const double gap = std::abs(spectral - symbolic) / static_cast<double>(c.n);
    c.test_function_gap = std::max(c.test_function_gap, gap);
  }
  return c;
}

TruncationError acs_truncation_error(const Filter& f, const LengthFunction& length, std::size_t n,
                                     std::size_t m) {
  const auto k = build_K(f, length, n);
  const auto& e = k.entries();
  TruncationError r;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < e.rows(); ++i) {
    for (Eigen::Index j = 0; j < e.cols(); ++j) {
      if (static_cast<std::size_t>(std::abs(i - j)) > m) acc += e(i, j) * e(i, j);
    }
  }
  r.empirical = acc / static_cast<double>(n);

  double tail = 0.0;
  for (std::size_t p = k.band_halfwidth(); p > m; --p) tail += 1.0 / (static_cast<double>(p) * static_cast<double>(p));
  r.bound = 2.0 * f.sup_abs() * f.sup_abs() * tail;
  return r;
}

double hermitian_defect(const Matrix& a) {
  require_square(a, "hermitian_defect");
  if (a.rows() == 0) return 0.0;
  const Matrix skew = a - a.transpose();
  return skew.norm() / (2.0 * std::sqrt(static_cast<double>(a.rows())));
}

std::vector<std::pair<std::size_t, double>> zero_distribution_witness(
    const std::function<Matrix(std::size_t)>& builder, const std::vector<std::size_t>& sizes, double p) {
  if (sizes.empty()) throw std::invalid_argument("zero_distribution_witness: no sizes");
  if (!(p >= 1.0)) throw std::invalid_argument("zero_distribution_witness: p must be >= 1");
  std::vector<std::pair<std::size_t, double>> out(sizes.size());
  parallel_for(sizes.size(), [&](std::size_t idx) {
    const std::size_t n = sizes[idx];
    const double scale = std::isinf(p) ? 1.0 : std::pow(static_cast<double>(n), -1.0 / p);
    out[idx] = {n, scale * schatten_norm(builder(n), p)};
  });
  return out;
}

double oscillation(const std::function<double(double)>& a, double alpha, double x, std::size_t resolution) {
  if (!(alpha > 0.0)) throw std::invalid_argument("oscillation: alpha must be positive");
  if (resolution < 2) throw std::invalid_argument("oscillation: resolution must be >= 2");
  const double lo = std::max(0.0, x - alpha);
  const double hi = std::min(1.0, x + alpha);
  double vmin = HUGE_VAL;
  double vmax = -HUGE_VAL;
  for (std::size_t k = 0; k < resolution; ++k) {
    const double z = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(resolution - 1);
    const double v = std::abs(a(z));
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  return vmax - vmin;
}

double fund_alm_her_defect(const std::function<double(double)>& a, std::size_t m, std::size_t n) {
  if (m == 0) throw std::invalid_argument("fund_alm_her_defect: m must be >= 1");
  if (n <= m) throw std::invalid_argument("fund_alm_her_defect: need n > m");
  double acc = 0.0;
  for (std::size_t j = 0; j + m < n; ++j) {
    const double d = a(grid_point(j + m, n)) - a(grid_point(j, n));
    acc += d * d;
  }
  return acc / static_cast<double>(n);
}

}  // namespace alif
