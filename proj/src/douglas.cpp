#include "domaingauge/douglas.hpp"

#include <algorithm>

#include "domaingauge/errors.hpp"

namespace dg {

namespace {

struct PsdAnalysis {
  double lambda = 0.0;      // sup of the generalized Rayleigh quotient on Ran(B)
  double out_of_range = 0;  // ‖(I - P_Ran(B)) A‖ / max(1, ‖A‖)
  double slack = 0.0;       // min eig(lambda*BB* - AA*) / max(1, ‖AA*‖)
};

// Both Douglas routes share the tolerance semantics: tol is a relative
// singular-value threshold on B. This side works from the SVD; the rank
// side works from column-pivoted elimination.
PsdAnalysis analyze(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double tol) {
  const Eigen::MatrixXd AAt = A * A.transpose();
  const Eigen::MatrixXd BBt = B * B.transpose();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(B, Eigen::ComputeFullU);
  const auto& sigma = svd.singularValues();
  const double smax = sigma.size() > 0 ? sigma[0] : 0.0;

  int r = 0;
  while (r < sigma.size() && sigma[r] > tol * smax && sigma[r] > 0) ++r;

  PsdAnalysis out;
  const Eigen::MatrixXd Ur = svd.matrixU().leftCols(r);
  const Eigen::MatrixXd residual = A - Ur * (Ur.transpose() * A);
  out.out_of_range = residual.norm() / std::max(1.0, A.norm());

  if (r > 0) {
    // AA* against BB* = U Σ² U^T restricted to the kept range
    const Eigen::MatrixXd G = Ur.transpose() * A;
    Eigen::VectorXd sinv = sigma.head(r).cwiseInverse();
    const Eigen::MatrixXd M = sinv.asDiagonal() * (G * G.transpose()) * sinv.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gm(M);
    out.lambda = std::max(gm.eigenvalues().maxCoeff(), 0.0);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> check(out.lambda * BBt - AAt);
  out.slack = check.eigenvalues().minCoeff() / std::max(1.0, AAt.norm());
  return out;
}

}  // namespace

DouglasResult douglas_findim(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double tol) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw DimensionMismatch("range inclusion needs square matrices of equal size");
  if (tol <= 0) throw ParseError("tolerance must be positive");

  const long n = A.rows();
  Eigen::MatrixXd stacked(n, 2 * n);
  stacked.leftCols(n) = B;
  stacked.rightCols(n) = A;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_b(B);
  qr_b.setThreshold(tol);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_s(stacked);
  qr_s.setThreshold(tol);

  DouglasResult r;
  r.included = qr_b.rank() == qr_s.rank();
  PsdAnalysis psd = analyze(A, B, tol);
  r.psd_slack = psd.slack;
  if (r.included) r.lambda = psd.lambda;
  return r;
}

bool douglas_psd_criterion(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double tol, double lambda_cap) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw DimensionMismatch("range inclusion needs square matrices of equal size");
  PsdAnalysis psd = analyze(A, B, tol);
  // AA* <= λBB* forces A into Ran(B); past that, the restricted Rayleigh
  // quotient is the smallest admissible λ
  return psd.out_of_range <= tol && psd.lambda <= lambda_cap;
}

}  // namespace dg
