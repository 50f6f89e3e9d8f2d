#include <doctest.h>

#include <cmath>
#include <random>

#include "domaingauge/errors.hpp"
#include "domaingauge/spectra.hpp"

using namespace dg;

TEST_CASE("moments from the self-similarity recursion") {
  auto m = cantor_moments(4);
  CHECK(m[0] == Rational(1));
  CHECK(m[1] == Rational(1, 2));
  CHECK(m[2] == Rational(3, 8));      // solved by hand from the recursion
  CHECK(m[3] == Rational(5, 16));     // cross-checked by Monte Carlo sampling
  CHECK(m[4] == Rational(87, 320));
}

TEST_CASE("cylinder means at depth one") {
  auto means = cantor_cylinder_means(1);
  REQUIRE(means.size() == 2);
  CHECK(means[0] == Rational(1, 6));
  CHECK(means[1] == Rational(5, 6));
}

TEST_CASE("multiplication operator is diagonal in the cylinder basis") {
  auto op = mult_op(1, Rational(1), Rational(0));
  CHECK(op.mat(0, 0) == doctest::Approx(1.0 / 6));
  CHECK(op.mat(1, 1) == doctest::Approx(5.0 / 6));
  CHECK(op.mat(0, 1) == 0.0);
  auto one = mult_op(3, Rational(0), Rational(1));
  CHECK((one.mat - Eigen::MatrixXd::Identity(8, 8)).norm() == 0.0);
}

TEST_CASE("empirical moments of the cylinder means converge to the measure moments") {
  auto m = cantor_moments(3);
  for (int p = 1; p <= 3; ++p) {
    Rational prev_err;
    for (int d = 2; d <= 10; ++d) {
      Rational err = rat_abs(cantor_empirical_moment(d, p) - m[static_cast<std::size_t>(p)]);
      // |x^p - c^p| <= p |x - c| on [0,1] and cylinders have width 3^-d
      CHECK(err <= Rational(p) * rat_pow(Rational(1, 3), d));
      if (d > 2) CHECK(err <= prev_err);
      prev_err = err;
    }
  }
}

TEST_CASE("resolvent distance is a pseudo-metric") {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> g;
  auto random_sym = [&](int n) {
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = g(rng);
    TruncatedOp op;
    op.mat = m;
    op.test_vectors = Eigen::MatrixXd::Identity(n, n);
    return op;
  };
  for (int t = 0; t < 25; ++t) {
    auto a = random_sym(12), b = random_sym(12), c = random_sym(12);
    CHECK(srt_dist(a, a) == 0.0);
    CHECK(srt_dist(a, b) == doctest::Approx(srt_dist(b, a)).epsilon(1e-12));
    CHECK(srt_dist(a, c) <= srt_dist(a, b) + srt_dist(b, c) + 1e-10);
    CHECK(srt_dist(a, b) >= 0.0);
  }
}

TEST_CASE("multiplication by (x/n + 1) converges to the identity at rate 1/n") {
  for (int depth = 1; depth <= 6; ++depth) {
    const long long dim = 1ll << depth;
    auto id = identity_op(dim);
    double prev = 1e9;
    for (int n = 1; n <= 40; n *= 2) {
      auto a = mult_op(depth, Rational(1, n), Rational(1));
      double d = srt_dist(a, id);
      CHECK(d <= 1.0 / n);
      CHECK(d < prev);
      prev = d;
    }
  }
}

TEST_CASE("interleaved truncation has the announced spectrum") {
  std::vector<double> a{3.0, -1.0, 2.0};
  auto op = interleave_approx(a, 3, 2);
  REQUIRE(op.mat.rows() == 9);
  // each value appears reps+1 = 3 times
  std::vector<double> diag(9);
  for (int i = 0; i < 9; ++i) diag[static_cast<std::size_t>(i)] = op.mat(i, i);
  for (double v : a) CHECK(std::count(diag.begin(), diag.end(), v) == 3);
  // k = N with zero values gives the zero matrix
  auto z = interleave_approx({0.0, 0.0}, 2, 3);
  CHECK(z.mat.norm() == 0.0);
}

TEST_CASE("interleaved truncations approach the plain diagonal as k grows") {
  // shared test family: the first N basis vectors of the shared dimension
  std::vector<double> a{1.0, -2.0, 0.5, 3.0, -1.5};
  const int n = 5, reps = 3;
  const long long dim = n + n * reps;
  auto with_family = [&](TruncatedOp op) {
    Eigen::MatrixXd fam = Eigen::MatrixXd::Zero(dim, n);
    for (int i = 0; i < n; ++i) fam(i, i) = 1.0;
    op.test_vectors = fam;
    return op;
  };
  auto target = with_family(diag_op(a, dim, "target"));
  double prev = 1e9;
  for (int k = 1; k <= n; ++k) {
    std::vector<double> head(a.begin(), a.begin() + k);
    auto approx = interleave_approx(head, k, reps);
    std::vector<double> embedded(static_cast<std::size_t>(dim), 0.0);
    for (long long i = 0; i < approx.mat.rows() && i < dim; ++i)
      embedded[static_cast<std::size_t>(i)] = approx.mat(i, i);
    auto padded = with_family(diag_op(embedded, dim, "approx"));
    double d = srt_dist(padded, target);
    CHECK(d <= prev + 1e-12);
    prev = d;
  }
  CHECK(prev <= 1e-12);  // at k = N the first N coordinates agree exactly
}

TEST_CASE("characteristic function basics") {
  CHECK(std::abs(cantor_cf(0.0, 10) - std::complex<double>(1.0, 0.0)) < 1e-15);
  std::mt19937_64 rng(78);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int t = 0; t < 200; ++t) {
    double x = u(rng);
    CHECK(std::abs(cantor_cf(x, 40)) <= 1.0 + 1e-14);
  }
}

TEST_CASE("one-step self-similarity of the characteristic function") {
  // mu^(3t) = e^{it} cos(t) mu^(t): exact at matched truncation depth
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> u(-30.0, 30.0);
  for (int t = 0; t < 100; ++t) {
    double x = u(rng);
    auto lhs = cantor_cf(3 * x, 40);
    auto rhs = std::polar(1.0, x) * std::cos(x) * cantor_cf(x, 39);
    CHECK(std::abs(lhs - rhs) < 1e-12);
    // and at equal depths the tail factor is negligible by 3^-40
    auto rhs_same = std::polar(1.0, x) * std::cos(x) * cantor_cf(x, 40);
    CHECK(std::abs(lhs - rhs_same) < 1e-10);
  }
}

TEST_CASE("point mass control: Wiener average stays at one") {
  auto delta0 = [](double) { return std::complex<double>(1.0, 0.0); };
  for (double T : {1e2, 1e3}) CHECK(wiener_average(delta0, T, 20001) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("Lebesgue control: Wiener average decays like 1/T") {
  auto leb = [](double t) {
    if (std::fabs(t) < 1e-14) return std::complex<double>(1.0, 0.0);
    return (std::polar(1.0, t) - 1.0) / std::complex<double>(0.0, t);
  };
  double a10 = wiener_average(leb, 10.0, 200001);
  double a100 = wiener_average(leb, 100.0, 200001);
  CHECK(a10 == doctest::Approx(0.2949).epsilon(2e-3));   // frozen from a high-resolution run
  CHECK(a100 == doctest::Approx(0.0312).epsilon(2e-3));
  CHECK(a100 < a10 / 5.0);
}

TEST_CASE("Cantor measure has no atoms by the Wiener criterion") {
  auto cf = [](double t) { return cantor_cf(t, 40); };
  double a2 = wiener_average(cf, 1e2, 400001);
  double a3 = wiener_average(cf, 1e3, 400001);
  CHECK(a2 == doctest::Approx(0.07552).epsilon(5e-3));  // frozen from a high-resolution run
  CHECK(a3 == doctest::Approx(0.01711).epsilon(5e-3));
  CHECK(a3 < a2);
}
