#include "alif/counterexample.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "alif/decomposition.hpp"
#include "alif/random.hpp"
#include "alif/spectral.hpp"
#include "alif/symbol.hpp"

namespace alif {
namespace {

constexpr std::size_t kThetaPoints = 100000;
constexpr std::size_t kDivergenceCap = 30000;

CheckResult make_check(std::string name, double value, double expected, double tolerance,
                       std::string detail = {}) {
  return {std::move(name), std::abs(value - expected) <= tolerance, value, expected, tolerance, std::move(detail)};
}

CheckResult make_flag(std::string name, bool passed, double value, double expected, double tolerance,
                      std::string detail = {}) {
  return {std::move(name), passed, value, expected, tolerance, std::move(detail)};
}

double theta_at(std::size_t k, std::size_t count) {
  return -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count - 1);
}

}  // namespace

std::vector<RationalNode> counterexample_filter_nodes() {
  return {
      {ratio(0, 1), ratio(21, 10)},     {ratio(19, 105), ratio(357, 190)}, {ratio(7, 30), ratio(123, 70)},
      {ratio(1, 3), ratio(36, 25)},     {ratio(38, 105), ratio(651, 475)}, {ratio(7, 15), ratio(36, 35)},
      {ratio(19, 35), ratio(378, 475)}, {ratio(2, 3), ratio(9, 20)},       {ratio(7, 10), ratio(27, 70)},
      {ratio(76, 105), ratio(651, 1900)}, {ratio(19, 21), ratio(42, 475)}, {ratio(14, 15), ratio(9, 140)},
      {ratio(1, 1), ratio(0, 1)},
  };
}

std::array<Rational, 3> counterexample_lengths() { return {ratio(3, 1), ratio(105, 19), ratio(30, 7)}; }

RationalMatrix3 counterexample_target() {
  return {{
      {ratio(70, 100), ratio(48, 100), ratio(15, 100)},
      {ratio(34, 100), ratio(38, 100), ratio(34, 100)},
      {ratio(24, 100), ratio(41, 100), ratio(49, 100)},
  }};
}

RationalMatrix3 counterexample_exact_K3() {
  const auto nodes = counterexample_filter_nodes();
  const auto lengths = counterexample_lengths();
  RationalMatrix3 k;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Rational y = Rational(i - j) / lengths[static_cast<std::size_t>(i)];
      k[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          interpolate_even_pwl<Rational>(nodes, y) / lengths[static_cast<std::size_t>(i)];
    }
  }
  return k;
}

Rational determinant(const RationalMatrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

CounterexampleBundle build_counterexample() {
  std::vector<Node> nodes;
  for (const auto& n : counterexample_filter_nodes()) nodes.push_back({to_double(n.x), to_double(n.value)});
  auto raw = make_pwl_filter(nodes);
  auto normalized = normalize_filter(raw);

  const auto exact = counterexample_lengths();
  const std::array<double, 2> breaks{0.25, 0.75};
  const std::array<double, 3> values{to_double(exact[0]), to_double(exact[1]), to_double(exact[2])};
  auto length = make_step_length(breaks, values);
  auto k3 = build_K(raw, length, 3);
  return {std::move(raw), std::move(normalized), std::move(length), std::move(k3)};
}

bool CounterexampleReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

std::vector<double> scaled_counterexample(const CounterexampleBundle& b, std::size_t m_iters,
                                          std::span<const double> start) {
  if (m_iters == 0) throw std::invalid_argument("scaled_counterexample: m_iters must be >= 1");
  std::vector<double> g(start.begin(), start.end());
  std::vector<double> norms;
  norms.reserve(m_iters);
  for (std::size_t m = 0; m < m_iters; ++m) {
    const auto avg = b.K3.apply(g);
    double acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      g[i] -= avg[i];
      acc += g[i] * g[i];
    }
    norms.push_back(std::sqrt(acc));
  }
  return norms;
}

std::vector<double> scaled_counterexample(const CounterexampleBundle& b, std::size_t m_iters, std::uint64_t seed) {
  return scaled_counterexample(b, m_iters, seeded_signal(b.K3.size(), seed));
}

double log_growth_rate(std::span<const double> norms, std::size_t from, std::size_t to) {
  if (from == 0 || to <= from || to > norms.size())
    throw std::invalid_argument("log_growth_rate: need 1 <= from < to <= size");
  return std::log(norms[to - 1] / norms[from - 1]) / static_cast<double>(to - from);
}

CounterexampleReport verify_counterexample(const CounterexampleBundle& b, std::uint64_t seed) {
  CounterexampleReport rep;
  rep.seed = seed;
  rep.l1_mass = b.filter_raw.l1_mass();
  auto& checks = rep.checks;

  // Matrix fidelity: exact rational route, then the floating-point build.
  const auto target = counterexample_target();
  const auto exact = counterexample_exact_K3();
  checks.push_back(make_flag("K3 exact rational equality", exact == target, 0.0, 0.0, 0.0,
                    "K3 rebuilt from rational nodes and lengths"));
  double entry_err = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) entry_err = std::max(entry_err, std::abs(b.K3(i, j) - to_double(target[i][j])));
  checks.push_back(make_check("K3 floating-point entries", entry_err, 0.0, 1e-15));

  const Rational det_exact = determinant(exact);
  checks.push_back(make_flag("determinant exact", det_exact == ratio(-81, 100000), to_double(det_exact), kExpectedDeterminant, 0.0,
                    "expected -81/100000"));
  rep.determinant = b.K3.entries().determinant();
  checks.push_back(make_check("determinant floating-point", rep.determinant, kExpectedDeterminant, 1e-12));

  const auto ev = eigenvalues(b.K3.entries());
  rep.min_eigenvalue = ev.front().real();
  checks.push_back(make_check("minimum eigenvalue", rep.min_eigenvalue, kExpectedMinEigenvalue, kEigenTolerance));
  const auto nc = necessary_condition(b.K3);
  rep.rho_iteration = nc.worst_value;
  checks.push_back(make_check("rho(I - K3)", rep.rho_iteration, kExpectedRho, kEigenTolerance));
  checks.push_back(make_flag("necessary condition violated", !nc.ok, nc.worst_value, 1.0, 0.0, "expects |1 - lambda| > 1"));

  // Symbol bounds for the raw and the normalized filter.
  const Symbol raw_sym(b.filter_raw, b.length);
  const auto raw_range = symbol_range(raw_sym, 301, 2001);
  checks.push_back(make_flag("raw symbol within [0, 2]", raw_range.condition_ok, raw_range.max, 2.0,
                    kSymbolConditionTolerance, "min " + std::to_string(raw_range.min)));
  checks.push_back(make_check("raw symbol maximum at theta = 0", raw_range.argmax.theta, 0.0, 1e-12));
  const Symbol norm_sym(b.filter_normalized, b.length);
  const auto norm_range = symbol_range(norm_sym, 301, 2001);
  const double norm_cap = 2.0 / rep.l1_mass;
  checks.push_back(make_flag("normalized symbol within [0, 2/||k||_1] and below 2",
                    norm_range.min >= -kSymbolConditionTolerance &&
                        norm_range.max <= norm_cap + kSymbolConditionTolerance && norm_range.max < 2.0,
                    norm_range.max, norm_cap, kSymbolConditionTolerance));

  // kappa(x_i, theta) = f_{i+1}(theta) on each step of L.
  double consistency = 0.0;
  for (std::size_t k = 0; k < 2001; ++k) {
    const double theta = theta_at(k, 2001);
    const auto f = f123_polynomials(theta);
    for (std::size_t i = 0; i < 3; ++i)
      consistency = std::max(consistency, std::abs(eval_symbol(raw_sym, 0.5 * static_cast<double>(i), theta) - f[i]));
  }
  checks.push_back(make_check("symbol matches f_1, f_2, f_3", consistency, 0.0, 1e-12));

  // f_1, f_2, f_3: nonnegative, maxima at theta = 0 equal to 1.96, 2, 2.
  double fmin = HUGE_VAL;
  std::array<double, 3> fmax{-HUGE_VAL, -HUGE_VAL, -HUGE_VAL};
  for (std::size_t k = 0; k < kThetaPoints; ++k) {
    const auto f = f123_polynomials(theta_at(k, kThetaPoints));
    for (std::size_t i = 0; i < 3; ++i) {
      fmin = std::min(fmin, f[i]);
      fmax[i] = std::max(fmax[i], f[i]);
    }
  }
  checks.push_back(make_flag("f_1, f_2, f_3 nonnegative", fmin >= -1e-12, fmin, 0.0, 1e-12));
  const auto coeffs = f123_cosine_coefficients();
  const std::array<Rational, 3> at_zero_expected{ratio(196, 100), ratio(2, 1), ratio(2, 1)};
  const auto at_zero = f123_polynomials(0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    Rational sum = 0;
    for (const auto& c : coeffs[i]) sum += c;
    const std::string name = "f_" + std::to_string(i + 1);
    checks.push_back(make_flag(name + "(0) exact", sum == at_zero_expected[i], to_double(sum), to_double(at_zero_expected[i]),
                      0.0));
    checks.push_back(make_check(name + "(0) floating-point", at_zero[i], to_double(at_zero_expected[i]), 1e-12));
    checks.push_back(make_flag(name + " maximum attained at theta = 0", fmax[i] <= at_zero[i] + 1e-12, fmax[i], at_zero[i],
                      1e-12));
  }

  // K'_3 = K_3 / ||k||_1.
  const auto k3n = build_K(b.filter_normalized, b.length, 3);
  const double commute = (k3n.entries() - b.K3.entries() / rep.l1_mass).cwiseAbs().maxCoeff();
  checks.push_back(make_check("normalization commutes with build", commute, 0.0, 1e-14));
  const auto nc_norm = necessary_condition(k3n);
  checks.push_back(make_flag("normalized K3 still has a negative eigenvalue", eigenvalues(k3n.entries()).front().real() < 0.0,
                    eigenvalues(k3n.entries()).front().real(), 0.0, 0.0,
                    "rho(I - K3') = " + std::to_string(nc_norm.worst_value)));

  // Inner loop diverges on a seeded random input.
  SiftingConfig cfg;
  cfg.max_inner = kDivergenceCap;
  const auto start = seeded_signal(3, seed);
  const auto sifted = sift(Signal(start), b.K3, cfg);
  checks.push_back(make_flag("sift diverges within 30000 iterations", sifted.telemetry.status == SiftStatus::diverged,
                    static_cast<double>(sifted.telemetry.iterations), static_cast<double>(kDivergenceCap), 0.0,
                    "status " + to_string(sifted.telemetry.status)));
  const auto norms = scaled_counterexample(b, 20000, std::span<const double>(start));
  rep.growth_rate = log_growth_rate(norms, 10000, 20000);
  checks.push_back(make_check("per-step log growth", rep.growth_rate, std::log(kExpectedRho), 1e-4));
  return rep;
}

}  // namespace alif
