#include "domaingauge/spectra.hpp"

#include <cmath>
#include <cstdlib>

#include "domaingauge/errors.hpp"

namespace dg {

std::vector<Rational> cantor_moments(int p_max) {
  if (p_max < 0) throw ParseError("p_max must be nonnegative");
  // m_p = (1 / (2*3^p)) * (m_p + sum_{j<=p} C(p,j) 2^(p-j) m_j), solved for m_p
  std::vector<Rational> m;
  m.reserve(static_cast<std::size_t>(p_max) + 1);
  m.push_back(1);
  std::vector<BigInt> binom{1};  // row p of Pascal's triangle
  BigInt pow3 = 1;
  for (int p = 1; p <= p_max; ++p) {
    std::vector<BigInt> next(static_cast<std::size_t>(p) + 1, 1);
    for (int j = 1; j < p; ++j) next[static_cast<std::size_t>(j)] = binom[static_cast<std::size_t>(j - 1)] + binom[static_cast<std::size_t>(j)];
    binom = std::move(next);
    pow3 *= 3;
    Rational acc = 0;
    BigInt two_pow = BigInt(1) << static_cast<unsigned>(p);  // 2^(p-j) starting at j=0
    for (int j = 0; j < p; ++j) {
      acc += Rational(binom[static_cast<std::size_t>(j)] * (two_pow >> static_cast<unsigned>(j))) * m[static_cast<std::size_t>(j)];
    }
    m.push_back(acc / Rational(2 * pow3 - 2));
  }
  return m;
}

std::vector<Rational> cantor_cylinder_means(int depth) {
  if (depth < 0) throw ParseError("depth must be nonnegative");
  std::vector<Rational> means{Rational(1, 2)};
  for (int d = 0; d < depth; ++d) {
    std::vector<Rational> next;
    next.reserve(means.size() * 2);
    for (const auto& v : means) next.push_back(v / 3);            // outermost map x/3
    for (const auto& v : means) next.push_back((v + 2) / 3);      // outermost map (x+2)/3
    means = std::move(next);
  }
  return means;
}

Rational cantor_empirical_moment(int depth, int p) {
  auto means = cantor_cylinder_means(depth);
  Rational acc = 0;
  for (const auto& v : means) acc += rat_pow(v, p);
  return acc / Rational(BigInt(means.size()));
}

long long max_matrix_dim() {
  if (const char* env = std::getenv("DOMAINGAUGE_MAX_N")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 4096;
}

namespace {

void check_dim(long long n) {
  if (n > max_matrix_dim())
    throw DimensionMismatch("matrix dimension " + std::to_string(n) + " exceeds the configured cap");
}

}  // namespace

TruncatedOp mult_op(int depth, const Rational& scale, const Rational& offset, std::string label) {
  if (depth < 1) throw ParseError("depth must be at least 1");
  const long long n = 1ll << depth;
  check_dim(n);
  TruncatedOp op;
  op.mat = Eigen::MatrixXd::Zero(n, n);
  auto means = cantor_cylinder_means(depth);
  for (long long i = 0; i < n; ++i)
    op.mat(i, i) = to_double(Rational(scale * means[static_cast<std::size_t>(i)] + offset));
  op.test_vectors = Eigen::MatrixXd::Identity(n, n);
  op.label = std::move(label);
  return op;
}

TruncatedOp diag_op(const std::vector<double>& values, long long dim, std::string label) {
  if (dim < static_cast<long long>(values.size())) throw DimensionMismatch("dim smaller than the value list");
  check_dim(dim);
  TruncatedOp op;
  op.mat = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t i = 0; i < values.size(); ++i) op.mat(static_cast<long long>(i), static_cast<long long>(i)) = values[i];
  op.test_vectors = Eigen::MatrixXd::Identity(dim, dim);
  op.label = std::move(label);
  return op;
}

TruncatedOp identity_op(long long dim) {
  check_dim(dim);
  TruncatedOp op;
  op.mat = Eigen::MatrixXd::Identity(dim, dim);
  op.test_vectors = Eigen::MatrixXd::Identity(dim, dim);
  op.label = "identity";
  return op;
}

double srt_dist(const TruncatedOp& A, const TruncatedOp& B) {
  if (A.mat.rows() != B.mat.rows() || A.test_vectors.rows() != B.test_vectors.rows() ||
      A.test_vectors.cols() != B.test_vectors.cols() ||
      !(A.test_vectors.array() == B.test_vectors.array()).all())
    throw DimensionMismatch("resolvent distance needs equal dimensions and a shared test family");
  const long long n = A.mat.rows();
  const std::complex<double> minus_i(0.0, -1.0);
  Eigen::MatrixXcd ra = A.mat.cast<std::complex<double>>();
  Eigen::MatrixXcd rb = B.mat.cast<std::complex<double>>();
  for (long long j = 0; j < n; ++j) {
    ra(j, j) += minus_i;
    rb(j, j) += minus_i;
  }
  Eigen::PartialPivLU<Eigen::MatrixXcd> lua(ra), lub(rb);
  Eigen::MatrixXcd xs = A.test_vectors.cast<std::complex<double>>();
  Eigen::MatrixXcd sa = lua.solve(xs);
  Eigen::MatrixXcd sb = lub.solve(xs);
  double acc = 0.0;
  double weight = 0.5;
  for (long long j = 0; j < A.test_vectors.cols(); ++j) {
    acc += weight * (sa.col(j) - sb.col(j)).norm();
    weight *= 0.5;
  }
  return acc;
}

TruncatedOp interleave_approx(const std::vector<double>& a, int k, int reps) {
  const int n = static_cast<int>(a.size());
  if (k < 1 || k > n) throw ParseError("class count k must satisfy 1 <= k <= len(a)");
  if (reps < 1) throw ParseError("reps must be at least 1");
  const long long dim = static_cast<long long>(k) + static_cast<long long>(k) * reps;
  check_dim(dim);
  std::vector<double> diag(static_cast<std::size_t>(dim));
  for (int i = 0; i < k; ++i) diag[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)];
  for (long long j = 0; j < static_cast<long long>(k) * reps; ++j)
    diag[static_cast<std::size_t>(k + j)] = a[static_cast<std::size_t>(j % k)];
  return diag_op(diag, dim, "interleave");
}

std::complex<double> cantor_cf(double t, int K) {
  if (K < 1) throw ParseError("K must be at least 1");
  double prod = 1.0;
  double arg = t;
  for (int k = 1; k <= K; ++k) {
    arg /= 3.0;
    prod *= std::cos(arg);
  }
  return std::polar(1.0, t / 2.0) * prod;
}

double wiener_average(const std::function<std::complex<double>(double)>& cf, double T, long long samples) {
  if (T <= 0) throw ParseError("T must be positive");
  if (samples < 100) throw ParseError("at least 100 quadrature nodes required");
  // |cf|^2 is even for characteristic functions of real measures; integrate
  // over [0, T] with composite Simpson and halve nothing (already the mean).
  long long intervals = samples - 1;
  if (intervals % 2 == 1) ++intervals;
  const double h = T / static_cast<double>(intervals);
  auto f = [&](double t) { return std::norm(cf(t)); };
  double acc = f(0.0) + f(T);
  for (long long i = 1; i < intervals; ++i) {
    const double t = h * static_cast<double>(i);
    acc += f(t) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  const double integral = acc * h / 3.0;  // ∫_0^T |cf|^2
  return integral / T;                    // (1/2T) ∫_{-T}^{T} by symmetry
}

}  // namespace dg
