#ifndef DOMAINGAUGE_DOUGLAS_HPP
#define DOMAINGAUGE_DOUGLAS_HPP

#include <Eigen/Dense>

#include <limits>
#include <optional>

namespace dg {

/// Finite-dimensional range-inclusion oracle: Ran(A) ⊂ Ran(B) iff
/// AA* <= λBB* for some λ > 0. `included` is decided by the rank criterion
/// rank([B A]) == rank(B); when it holds, `lambda` is the smallest λ with
/// λBB* - AA* positive semidefinite on the range of B, verified against
/// -tol * scale below.
struct DouglasResult {
  bool included = false;
  std::optional<double> lambda;
  double psd_slack = 0.0;  // most negative eigenvalue of λBB* - AA* (>= -tol*scale when included)
};

DouglasResult douglas_findim(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double tol);

/// The second route of the oracle: does some λ (below lambda_cap, if finite)
/// make λBB* - AA* positive semidefinite up to tol? Decided through the
/// generalized Rayleigh quotient on Ran(B); agrees with the rank criterion.
bool douglas_psd_criterion(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double tol,
                           double lambda_cap = std::numeric_limits<double>::infinity());

}  // namespace dg

#endif
