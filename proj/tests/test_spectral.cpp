#include <doctest.h>

#include <cmath>
#include <random>

#include "alif/counterexample.hpp"
#include "alif/spectral.hpp"
#include "oracles.hpp"

#include <Eigen/Eigenvalues>

using namespace alif;

namespace {

Matrix random_matrix(std::size_t n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = g(rng);
  return m;
}

Matrix diag(std::initializer_list<double> d) {
  Vector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return Matrix(v.asDiagonal());
}

}  // namespace

TEST_CASE("eigenvalues") {
  const auto b = build_counterexample();
  const auto ev = eigenvalues(b.K3.entries());
  REQUIRE(ev.size() == 3);
  CHECK(std::abs(ev[0].real() + 0.0018) <= 2e-4);
  // pinned by the exact characteristic polynomial
  const auto roots = oracle::polynomial_roots(oracle::characteristic_polynomial(b.K3.entries()));
  CHECK(oracle::match_distance(ev, roots) <= 1e-12);
  CHECK(std::abs(ev[0].real() - (-0.00176327890554957883766643746784)) <= 1e-14);

  for (const auto& z : eigenvalues(Matrix::Identity(5, 5))) CHECK(z == std::complex<double>(1.0, 0.0));

  Matrix swap(2, 2);
  swap << 0, 1, 1, 0;
  const auto s = eigenvalues(swap);
  CHECK(s[0].real() == doctest::Approx(-1.0));
  CHECK(s[1].real() == doctest::Approx(1.0));

  Matrix rot(2, 2);
  rot << 0, -1, 1, 0;
  const auto r = eigenvalues(rot);
  CHECK(r[0].imag() == doctest::Approx(-1.0));
  CHECK(r[1].imag() == doctest::Approx(1.0));

  CHECK_THROWS_AS(eigenvalues(Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("singular values and Schatten norms") {
  for (double s : singular_values(Matrix::Identity(3, 3))) CHECK(s == doctest::Approx(1.0));
  const auto sv = singular_values(diag({3.0, -4.0}));
  CHECK(sv[0] == doctest::Approx(4.0));
  CHECK(sv[1] == doctest::Approx(3.0));

  CHECK(schatten_norm(Matrix::Identity(4, 4), 2.0) == doctest::Approx(2.0));
  CHECK(schatten_norm(Matrix::Identity(4, 4), kInfinity) == doctest::Approx(1.0));
  CHECK(schatten_norm(diag({1.0, 2.0, 2.0}), 1.0) == doctest::Approx(5.0));
  CHECK_THROWS_AS(schatten_norm(Matrix::Identity(2, 2), 0.5), std::invalid_argument);

  const auto b = build_counterexample();
  const Matrix& k = b.K3.entries();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gram(Eigen::MatrixXd(k.transpose() * k));
  auto lam = gram.eigenvalues();
  const auto s = singular_values(k);
  for (Eigen::Index i = 0; i < 3; ++i) CHECK(std::abs(s[2 - static_cast<std::size_t>(i)] - std::sqrt(std::max(0.0, lam(i)))) <= 1e-8);
}

TEST_CASE("singular values agree with the Gram spectrum on random matrices") {
  std::mt19937 rng(23);
  for (std::size_t n : {2u, 5u, 10u, 40u}) {
    const auto a = random_matrix(n, rng);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gram(Eigen::MatrixXd(a.transpose() * a));
    const auto s = singular_values(a);
    REQUIRE(std::is_sorted(s.rbegin(), s.rend()));
    for (std::size_t i = 0; i < n; ++i) {
      const double ref = std::sqrt(std::max(0.0, gram.eigenvalues()(static_cast<Eigen::Index>(n - 1 - i))));
      REQUIRE(std::abs(s[i] - ref) <= 1e-8 * std::max(1.0, s.front()));
    }
    const double fro = a.norm();
    REQUIRE(std::abs(schatten_norm(a, 2.0) - fro) <= 1e-10 * fro);
  }
}

TEST_CASE("eigenvalues match exact characteristic polynomial roots for n <= 6") {
  std::mt19937 rng(29);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (unsigned seed = 0; seed < 8; ++seed) {
      const auto a = random_matrix(n, rng);
      const auto roots = oracle::polynomial_roots(oracle::characteristic_polynomial(a));
      REQUIRE(oracle::match_distance(eigenvalues(a), roots) <= 1e-9);
    }
  }
}

TEST_CASE("eigen residuals") {
  std::mt19937 rng(31);
  std::vector<Matrix> cases{random_matrix(8, rng), random_matrix(64, rng),
                            build_K(make_triangular_filter(), make_continuous_length([](double x) { return 4.0 + 4.0 * x; }), 200)
                                .entries(),
                            build_K(make_triangular_filter(), make_step_length(std::vector<double>{0.5}, std::vector<double>{4.0, 8.0}), 512)
                                .entries()};
  for (const auto& a : cases) {
    const auto [vals, vecs] = eigenpairs(a);
    const Eigen::MatrixXcd ac = a.cast<std::complex<double>>();
    const double scale = a.norm();
    for (Eigen::Index k = 0; k < vecs.cols(); ++k) {
      const Eigen::VectorXcd v = vecs.col(k);
      const double res = (ac * v - vals[static_cast<std::size_t>(k)] * v).norm() / v.norm();
      REQUIRE(res <= 1e-8 * scale);
    }
  }
}

TEST_CASE("necessary condition") {
  const auto b = build_counterexample();
  const auto nc = necessary_condition(b.K3);
  CHECK_FALSE(nc.ok);
  CHECK(nc.worst_value == doctest::Approx(1.0018).epsilon(2e-4));
  CHECK(nc.worst_index == 0);

  CHECK(necessary_condition(Matrix::Identity(6, 6)).ok);
  CHECK(necessary_condition(build_K(make_triangular_filter(), make_constant_length(4.0), 64)).ok);

  const auto rep = analyze_spectrum(b.K3.entries());
  CHECK(rep.spectral_radius_of_iteration == doctest::Approx(nc.worst_value));
  CHECK_FALSE(rep.necessary_condition_ok);
  CHECK(rep.max_imag <= 1e-10);
}

TEST_CASE("distribution_check") {
  const Symbol id(make_uniform_filter(), make_constant_length(1.0));
  const auto c = distribution_check(build_K(id.filter(), id.length(), 20).entries(), id);
  CHECK(c.discrepancy == 0.0);
  CHECK(c.outlier_fraction == 0.0);

  const Symbol tri(make_triangular_filter(), make_constant_length(8.0));
  const auto small = distribution_check(build_K(tri.filter(), tri.length(), 128).entries(), tri);
  const auto large = distribution_check(build_K(tri.filter(), tri.length(), 512).entries(), tri);
  CHECK(large.discrepancy < small.discrepancy);
  CHECK(small.outlier_fraction >= 0.0);
  CHECK(small.outlier_fraction <= 1.0);

  const auto b = build_counterexample();
  const auto ce = distribution_check(b.K3.entries(), Symbol(b.filter_raw, b.length));
  CHECK(std::isfinite(ce.discrepancy));
  CHECK(ce.max_imag <= 1e-10);
}

TEST_CASE("acs truncation error") {
  const auto b = build_counterexample();
  const auto t = acs_truncation_error(b.filter_raw, b.length, 3, 1);
  CHECK(t.empirical == doctest::Approx((0.15 * 0.15 + 0.24 * 0.24) / 3.0).epsilon(1e-14));
  CHECK(t.empirical <= t.bound + 1e-12);
  CHECK(acs_truncation_error(b.filter_raw, b.length, 3, 6).empirical == 0.0);

  const auto tri = make_triangular_filter();
  const auto l16 = make_constant_length(16.0);
  double prev = HUGE_VAL;
  for (std::size_t m : {1u, 2u, 4u, 8u}) {
    const auto r = acs_truncation_error(tri, l16, 256, m);
    CHECK(r.empirical <= prev);
    CHECK(r.empirical <= r.bound + 1e-12);
    prev = r.empirical;
  }
}

TEST_CASE("acs bound holds over a random sweep") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 80; ++trial) {
    const auto f = trial % 2 ? make_triangular_filter()
                             : make_pwl_filter(std::vector<Node>{{0.0, 0.5 + 2.0 * u(rng)}, {u(rng), 2.0 * u(rng)}, {1.0, 0.0}});
    const double a = 1.0 + 15.0 * u(rng);
    const double c = 1.0 + 15.0 * u(rng);
    const auto l = make_step_length(std::vector<double>{0.5}, std::vector<double>{a, c});
    const std::size_t n = 4 + static_cast<std::size_t>(120 * u(rng));
    const std::size_t m = static_cast<std::size_t>(18 * u(rng));
    const auto r = acs_truncation_error(f, l, n, m);
    REQUIRE(r.empirical <= r.bound + 1e-12);
  }
}

TEST_CASE("hermitian defect") {
  CHECK(hermitian_defect(Matrix::Identity(4, 4)) == 0.0);
  Matrix nil(2, 2);
  nil << 0, 1, 0, 0;
  CHECK(hermitian_defect(nil) == doctest::Approx(0.5).epsilon(1e-15));

  const auto lin = make_continuous_length([](double x) { return 2.0 + x; });
  double prev = HUGE_VAL;
  for (std::size_t n : {64u, 256u, 1024u}) {
    const double d = hermitian_defect(build_K(make_triangular_filter(), lin, n).entries());
    CHECK(d < prev);
    prev = d;
  }

  const auto step = make_step_length(std::vector<double>{0.5}, std::vector<double>{4.0, 8.0});
  prev = HUGE_VAL;
  for (std::size_t n : {64u, 256u, 1024u}) {
    const double d = hermitian_defect(build_K(make_triangular_filter(), step, n).entries());
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("zero distribution witness") {
  const std::vector<std::size_t> sizes{16, 64, 256};
  for (const auto& [n, v] : zero_distribution_witness([](std::size_t n) { return Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)).eval(); }, sizes, 2.0))
    CHECK(v == 0.0);

  const auto id = [](double x) { return x; };
  const auto diff = zero_distribution_witness(
      [&](std::size_t n) { return Matrix(diag_sampling(id, n, SamplingGrid::over_n) - diag_sampling(id, n, SamplingGrid::over_n_minus_1)); },
      sizes, 2.0);
  double prev = HUGE_VAL;
  for (const auto& [n, v] : diff) {
    CHECK(v <= 1.0 / std::sqrt(static_cast<double>(n)));
    CHECK(v < prev);
    prev = v;
  }

  const auto rank_one = zero_distribution_witness(
      [](std::size_t n) {
        Matrix m = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        m(0, 0) = 1.0;
        return m;
      },
      sizes, 1.0);
  for (const auto& [n, v] : rank_one) CHECK(v == doctest::Approx(1.0 / static_cast<double>(n)).epsilon(1e-14));
  CHECK_THROWS_AS(zero_distribution_witness([](std::size_t) { return Matrix(); }, {}, 2.0), std::invalid_argument);
}

TEST_CASE("oscillation") {
  CHECK(oscillation([](double) { return 3.0; }, 0.1, 0.5) == 0.0);
  const std::size_t res = 4097;
  CHECK(std::abs(oscillation([](double x) { return x; }, 0.1, 0.5, res) - 0.2) <= 2.0 * 0.2 / res);
  CHECK(oscillation([](double x) { return x < 0.5 ? 1.0 : 3.5; }, 0.1, 0.5) == 2.5);
  // the ball is clipped to [0, 1]
  CHECK(oscillation([](double x) { return x; }, 0.3, 0.0) == doctest::Approx(0.3));
  CHECK_THROWS_AS(oscillation([](double x) { return x; }, 0.0, 0.5), std::invalid_argument);
}

TEST_CASE("fund_alm_her_defect") {
  CHECK(fund_alm_her_defect([](double) { return 2.0; }, 3, 50) == 0.0);
  for (std::size_t n : {16u, 256u}) {
    const double nn = static_cast<double>(n);
    CHECK(std::abs(fund_alm_her_defect([](double x) { return x; }, 1, n) - 1.0 / (nn * (nn - 1.0))) <= 1e-12);
  }
  double prev = HUGE_VAL;
  for (std::size_t n : {64u, 256u, 1024u}) {
    const double v = fund_alm_her_defect([](double x) { return x < 0.4 ? 1.0 : -1.0; }, 1, n);
    CHECK(v < prev);
    prev = v;
  }
  CHECK_THROWS_AS(fund_alm_her_defect([](double x) { return x; }, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(fund_alm_her_defect([](double x) { return x; }, 4, 4), std::invalid_argument);
}
