#ifndef DOMAINGAUGE_SPECTRA_HPP
#define DOMAINGAUGE_SPECTRA_HPP

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "domaingauge/rational.hpp"

namespace dg {

// Numerics around a concrete singular continuous measure: the standard
// middle-thirds Cantor measure, i.e. the self-similar measure with maps
// x/3 and (x+2)/3, weights 1/2 each. All decisions elsewhere are exact;
// this module is deliberately floating point (with exact rational moments
// and cylinder means where the self-similarity gives them in closed form).

/// Moments m_p = ∫ x^p dμ, p = 0..p_max, from the self-similarity recursion.
std::vector<Rational> cantor_moments(int p_max);

/// Conditional means E[X | C_w] for the 2^depth cylinders C_w of the given
/// depth, in lexicographic order (first symbol = outermost map).
std::vector<Rational> cantor_cylinder_means(int depth);

/// Exact p-th empirical moment of the depth-d cylinder-mean multiset.
Rational cantor_empirical_moment(int depth, int p);

/// Matrix-size cap, overridable through DOMAINGAUGE_MAX_N.
long long max_matrix_dim();

// ---------------------------------------------------------------------------

/// Finite stand-in for a self-adjoint operator: a real symmetric matrix with
/// an ordered test-vector family (columns), weighted 2^-(n+1) in the
/// resolvent pseudo-metric.
struct TruncatedOp {
  Eigen::MatrixXd mat;
  Eigen::MatrixXd test_vectors;
  std::string label;
};

/// Multiplication by f(x) = scale*x + offset on the depth-d cylinder basis:
/// diagonal with entries f(E[X | C_w]); test vectors are the basis vectors.
TruncatedOp mult_op(int depth, const Rational& scale, const Rational& offset, std::string label = "");

/// Diagonal operator diag(values padded with zeros to dim).
TruncatedOp diag_op(const std::vector<double>& values, long long dim, std::string label = "");

TruncatedOp identity_op(long long dim);

/// Σ_n 2^-(n+1) ‖(A-i)^{-1} ξ_n - (B-i)^{-1} ξ_n‖ over the shared test
/// family; a pseudo-metric on equal-dimension truncations.
double srt_dist(const TruncatedOp& A, const TruncatedOp& B);

/// Interleaved diagonal of size k + k*reps: the first k slots carry
/// a_1..a_k, and slot k+j repeats a_(j mod k + 1) (round-robin truncation of
/// the infinite residue classes).
TruncatedOp interleave_approx(const std::vector<double>& a, int k, int reps);

// ---------------------------------------------------------------------------

/// K-term truncation of the Cantor characteristic function:
/// e^{it/2} Π_{k=1..K} cos(t 3^-k).
std::complex<double> cantor_cf(double t, int K);

/// (1/2T) ∫_{-T}^{T} |cf(t)|^2 dt by composite Simpson quadrature with
/// `samples` nodes. The limit T→∞ is the sum of squared atom masses.
double wiener_average(const std::function<std::complex<double>(double)>& cf, double T, long long samples);

}  // namespace dg

#endif
