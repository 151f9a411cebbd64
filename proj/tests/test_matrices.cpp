#include <doctest.h>

#include <random>

#include "alif/counterexample.hpp"
#include "alif/matrices.hpp"
#include "oracles.hpp"

using namespace alif;

namespace {

struct Config {
  Filter filter;
  LengthFunction length;
};

// Random triangular/uniform/pwl filters with constant, step and continuous lengths.
Config random_config(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, 2);
  Filter f = make_triangular_filter();
  switch (pick(rng)) {
    case 0: f = make_uniform_filter(); break;
    case 1: f = make_pwl_filter(std::vector<Node>{{0.0, 1.0 + u(rng)}, {u(rng), u(rng)}, {1.0, 0.0}}); break;
    default: break;
  }
  const double a = 0.5 + 9.0 * u(rng);
  const double b = 0.5 + 9.0 * u(rng);
  switch (pick(rng)) {
    case 0: return {f, make_constant_length(a)};
    case 1: return {f, make_step_length(std::vector<double>{0.3 + 0.4 * u(rng)}, std::vector<double>{a, b})};
    default: return {f, make_continuous_length([a, b](double x) { return a + (b - a) * x; })};
  }
}

}  // namespace

TEST_CASE("build_K reproduces the 3x3 counterexample matrix") {
  const auto b = build_counterexample();
  const double expected[3][3] = {{0.7, 0.48, 0.15}, {0.34, 0.38, 0.34}, {0.24, 0.41, 0.49}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(b.K3(i, j) - expected[i][j]) <= 1e-15);
}

TEST_CASE("unit-length filters give the identity") {
  for (std::size_t n : {2u, 3u, 17u, 64u}) {
    for (const auto& f : {make_uniform_filter(), make_triangular_filter()}) {
      const auto k = build_K(f, make_constant_length(1.0), n);
      CHECK(k.entries() == Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
    }
  }
  CHECK_THROWS_AS(build_K(make_uniform_filter(), make_constant_length(1.0), 1), std::invalid_argument);
}

TEST_CASE("toeplitz_from_coeffs") {
  CHECK(toeplitz_from_coeffs({{0, 1.0}}, 3) == Matrix::Identity(3, 3));

  Matrix shift = Matrix::Zero(3, 3);
  shift(1, 0) = 1.0;
  shift(2, 1) = 1.0;
  CHECK(toeplitz_from_coeffs({{1, 1.0}}, 3) == shift);

  const auto tri = toeplitz_from_coeffs({{-1, 0.5}, {0, 1.0}, {1, 0.5}}, 4);
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      const double want = i == j ? 1.0 : (std::abs(i - j) == 1 ? 0.5 : 0.0);
      CHECK(tri(i, j) == want);
    }
  }
}

TEST_CASE("diag_sampling") {
  const auto id = [](double x) { return x; };
  const auto over_n = diag_sampling(id, 4, SamplingGrid::over_n);
  const auto over_nm1 = diag_sampling(id, 4, SamplingGrid::over_n_minus_1);
  const double a[4] = {0.25, 0.5, 0.75, 1.0};
  const double b[4] = {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};
  for (Eigen::Index i = 0; i < 4; ++i) {
    CHECK(over_n(i, i) == a[i]);
    CHECK(over_nm1(i, i) == b[i]);
  }
  CHECK(over_n.isDiagonal());
  const auto one = [](double) { return 1.0; };
  CHECK(diag_sampling(one, 5, SamplingGrid::over_n) == Matrix::Identity(5, 5));
  CHECK(diag_sampling(one, 5, SamplingGrid::over_n_minus_1) == Matrix::Identity(5, 5));
}

TEST_CASE("factorize_K") {
  SUBCASE("counterexample main diagonal") {
    const auto b = build_counterexample();
    const auto fac = factorize_K(b.filter_raw, b.length, 3);
    const auto* t0 = fac.term(0);
    REQUIRE(t0 != nullptr);
    CHECK(t0->diagonal[0] == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(t0->diagonal[1] == doctest::Approx(0.38).epsilon(1e-15));
    CHECK(t0->diagonal[2] == doctest::Approx(0.49).epsilon(1e-15));
    CHECK(fac.reconstruct() == b.K3.entries());
  }
  SUBCASE("identity has a single unit term") {
    const auto fac = factorize_K(make_uniform_filter(), make_constant_length(1.0), 6);
    for (const auto& t : fac.terms) {
      for (double d : t.diagonal) CHECK(d == (t.shift == 0 ? 1.0 : 0.0));
    }
  }
  SUBCASE("triangular filter, L = 2") {
    const auto fac = factorize_K(make_triangular_filter(), make_constant_length(2.0), 5);
    CHECK(fac.max_shift == 2);
    for (double d : fac.term(0)->diagonal) CHECK(d == 0.5);
    for (double d : fac.term(1)->diagonal) CHECK(d == 0.25);
    for (double d : fac.term(-1)->diagonal) CHECK(d == 0.25);
    for (double d : fac.term(2)->diagonal) CHECK(d == 0.0);
    CHECK(fac.term(3) == nullptr);
  }
}

TEST_CASE("build_K_truncated") {
  const auto b = build_counterexample();
  const auto t1 = build_K_truncated(b.filter_raw, b.length, 3, 1);
  const double expected[3][3] = {{0.7, 0.48, 0.0}, {0.34, 0.38, 0.34}, {0.0, 0.41, 0.49}};
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) CHECK(std::abs(t1(i, j) - expected[i][j]) <= 1e-15);

  const auto full = build_K(make_triangular_filter(), make_constant_length(5.5), 40);
  CHECK(build_K_truncated(make_triangular_filter(), make_constant_length(5.5), 40, full.band_halfwidth()) ==
        full.entries());
  CHECK(build_K_truncated(make_triangular_filter(), make_constant_length(5.5), 40, 0) ==
        Matrix(full.entries().diagonal().asDiagonal()));
}

TEST_CASE("apply matches the dense product") {
  std::mt19937 rng(3);
  std::normal_distribution<double> g;
  const auto k = build_K(make_triangular_filter(), make_constant_length(6.3), 50);
  std::vector<double> x(50);
  for (auto& v : x) v = g(rng);
  const auto y = k.apply(x);
  const Vector dense = k.entries() * Eigen::Map<const Vector>(x.data(), 50);
  for (std::size_t i = 0; i < 50; ++i) CHECK(std::abs(y[i] - dense(static_cast<Eigen::Index>(i))) <= 1e-14);
}

TEST_CASE("random configurations: band, row formula, reconstruction, truncation") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> size(2, 64);
  for (int trial = 0; trial < 150; ++trial) {
    const auto c = random_config(rng);
    const std::size_t n = size(rng);
    const auto k = build_K(c.filter, c.length, n);
    const auto& e = k.entries();
    const auto band = static_cast<Eigen::Index>(std::ceil(c.length.upper_bound()));

    const auto brute = oracle::brute_force_K(c.filter, c.length, n);
    REQUIRE((e - brute).cwiseAbs().maxCoeff() == 0.0);

    for (Eigen::Index i = 0; i < e.rows(); ++i)
      for (Eigen::Index j = 0; j < e.cols(); ++j)
        if (std::abs(i - j) > band) REQUIRE(e(i, j) == 0.0);

    // row i of K equals row i of T_n with coefficients f_p(x_i)
    for (std::size_t i = 0; i < n; ++i) {
      std::map<std::ptrdiff_t, double> coeffs;
      const double l = c.length(grid_point(i, n));
      for (std::ptrdiff_t p = -band; p <= band; ++p) coeffs[p] = c.filter(static_cast<double>(p) / l) / l;
      const auto t = toeplitz_from_coeffs(coeffs, n);
      REQUIRE(t.row(static_cast<Eigen::Index>(i)) == e.row(static_cast<Eigen::Index>(i)));
    }

    REQUIRE(factorize_K(c.filter, c.length, n).reconstruct() == e);

    std::uniform_int_distribution<std::size_t> mdist(0, static_cast<std::size_t>(band) + 1);
    const std::size_t m = mdist(rng);
    const auto tr = build_K_truncated(c.filter, c.length, n, m);
    for (Eigen::Index i = 0; i < e.rows(); ++i)
      for (Eigen::Index j = 0; j < e.cols(); ++j)
        REQUIRE(tr(i, j) == (static_cast<std::size_t>(std::abs(i - j)) <= m ? e(i, j) : 0.0));
  }
}

TEST_CASE("reconstruction sweep up to n = 256") {
  std::mt19937 rng(9);
  for (std::size_t n : {65u, 100u, 128u, 200u, 256u}) {
    const auto c = random_config(rng);
    REQUIRE(factorize_K(c.filter, c.length, n).reconstruct() == build_K(c.filter, c.length, n).entries());
  }
}

TEST_CASE("interior row sums of the triangular filter approach one") {
  for (double c : {4.0, 16.0, 64.0}) {
    const std::size_t n = 512;
    const auto k = build_K(make_triangular_filter(), make_constant_length(c), n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!(c < static_cast<double>(i) && static_cast<double>(i) < static_cast<double>(n) - 1.0 - c)) continue;
      const double sum = k.entries().row(static_cast<Eigen::Index>(i)).sum();
      REQUIRE(std::abs(sum - 1.0) <= 1.0 / c);
    }
  }
}
