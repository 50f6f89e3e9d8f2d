#include <doctest.h>

#include <random>

#include "domaingauge/douglas.hpp"
#include "domaingauge/errors.hpp"

using namespace dg;

namespace {

Eigen::MatrixXd random_matrix(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = g(rng);
  return m;
}

// B with exact rank r: product of random n x r factors
Eigen::MatrixXd random_rank_deficient(std::mt19937_64& rng, int n, int r) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd u(n, r), v(r, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r; ++j) {
      u(i, j) = g(rng);
      v(j, i) = g(rng);
    }
  return u * v;
}

}  // namespace

TEST_CASE("identical matrices are included with unit lambda") {
  std::mt19937_64 rng(42);
  Eigen::MatrixXd a = random_matrix(rng, 6);
  auto r = douglas_findim(a, a, 1e-8);
  REQUIRE(r.included);
  CHECK(*r.lambda == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("invertible target includes everything") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    Eigen::MatrixXd a = random_matrix(rng, 6);
    Eigen::MatrixXd b = random_matrix(rng, 6);  // almost surely invertible
    auto r = douglas_findim(a, b, 1e-8);
    CHECK(r.included);
  }
}

TEST_CASE("a direction outside the range blocks inclusion and the PSD test") {
  std::mt19937_64 rng(44);
  // B projects onto the first three coordinates; A maps onto the fourth
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(6, 6);
  for (int i = 0; i < 3; ++i) b(i, i) = 1.0;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(6, 6);
  a(3, 0) = 1.0;
  auto r = douglas_findim(a, b, 1e-8);
  REQUIRE_FALSE(r.included);
  CHECK_FALSE(douglas_psd_criterion(a, b, 1e-8, 1e6));
  CHECK(r.psd_slack < -1e-8);
}

TEST_CASE("rank and PSD criteria agree on random pairs") {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 300; ++t) {
    Eigen::MatrixXd a = random_matrix(rng, 6);
    Eigen::MatrixXd b = random_matrix(rng, 6);
    auto r = douglas_findim(a, b, 1e-8);
    CHECK(r.included == douglas_psd_criterion(a, b, 1e-8));
  }
}

TEST_CASE("rank and PSD criteria agree on engineered rank-deficient pairs") {
  std::mt19937_64 rng(46);
  for (int t = 0; t < 60; ++t) {
    int rank = 1 + static_cast<int>(t % 5);
    Eigen::MatrixXd b = random_rank_deficient(rng, 6, rank);
    Eigen::MatrixXd a;
    if (t % 2 == 0) {
      a = b * random_matrix(rng, 6);  // inside the range by construction
    } else {
      a = random_matrix(rng, 6);  // almost surely sticks out of a deficient range
    }
    auto r = douglas_findim(a, b, 1e-8);
    CHECK(r.included == douglas_psd_criterion(a, b, 1e-8));
    CHECK(r.included == (t % 2 == 0));
    if (r.included) {
      // lambda certifies the domination up to tolerance
      CHECK(r.psd_slack >= -1e-8);
    }
  }
}

TEST_CASE("dimension mismatch is rejected") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(4, 4);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(6, 6);
  CHECK_THROWS_AS(douglas_findim(a, b, 1e-8), DimensionMismatch);
}
