#ifndef DOMAINGAUGE_REDUCTIONS_HPP
#define DOMAINGAUGE_REDUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domaingauge/operators.hpp"

namespace dg {

// The reduction maps between the sequence relations and the operator-domain
// relations, as exact transformations on represented inputs.

/// Sign-splitting interleave: source entry x_n lands at output positions
/// (2n, 2n+1) as (x_n, 0) for x_n >= 0 and (0, -x_n) otherwise. Nonnegative,
/// injective, and preserves bounded-difference equivalence exactly.
struct TildeImage {
  RealSeqRep seq;
};
TildeImage tilde(const RealSeqRep& x);

/// Diagonal operator with eigenvalues exp(tilde(x)_n / 2) - 1.
DiagOpSeq psi(const RealSeqRep& alpha);

/// The resolvent-weight logarithm phi(A)_n = -2 ln(|a_n| + 1). Exact as a
/// represented sequence whenever negating the weight-log stays in class;
/// always comparable through decide_linf below.
struct PhiImage {
  DiagOpSeq op;
  std::optional<RealSeqRep> exact;
  double eval_double(long long n) const { return -2.0 * op.log_weight(n); }
};
PhiImage phi(const DiagOpSeq& A);

/// Bounded-difference decision on weight-log images. Verdict-compatible with
/// decide_linf on exact images and with decide_edom on the source operators.
LinfVerdict decide_linf_phi(const PhiImage& a, const PhiImage& b);

/// Spectrum with block n carrying value 2^n - 1 and multiplicity alpha_n.
/// Requires a divergent total (alpha in the divergent-sum domain); the
/// associated dimension sequence returns alpha exactly.
SpectrumRep psi_k(const DimSeqRep& alpha);

// ---------------------------------------------------------------------------
// Property harness for the two reduction chains.

struct BireductionDiscrepancy {
  std::string direction;  // "psi" or "phi"
  long long trial;
  std::string detail;
};

struct BireductionReport {
  std::uint64_t seed = 0;
  long long trials = 0;
  long long psi_agreements = 0;
  long long phi_agreements = 0;
  std::vector<BireductionDiscrepancy> discrepancies;
  bool ok() const { return discrepancies.empty(); }
};

/// Samples pairs (alpha, beta) of sequences and (A, B) of operators and
/// checks both chains verdict-for-verdict:
///   decide_edom(psi(alpha), psi(beta)) == decide_linf(alpha, beta)
///   decide_linf_phi(phi(A), phi(B))    == decide_edom(A, B)
BireductionReport verify_bireduction(std::uint64_t seed, long long trials);

}  // namespace dg

#endif
