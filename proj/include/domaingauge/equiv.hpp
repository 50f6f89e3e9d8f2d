#ifndef DOMAINGAUGE_EQUIV_HPP
#define DOMAINGAUGE_EQUIV_HPP

#include <optional>
#include <string>
#include <vector>

#include "domaingauge/dimseq.hpp"
#include "domaingauge/realseq.hpp"

namespace dg {

// ---------------------------------------------------------------------------
// Bounded-difference relation on real sequences.

/// sup/inf of (a_n - b_n) over n >= 0, when finite.
struct DiffBounds {
  bool bounded = false;
  Rational sup, inf;
};
DiffBounds diff_bounds(const RealSeqRep& a, const RealSeqRep& b);

inline constexpr long long kLinfWitnessThreshold = 1000000;

struct LinfVerdict {
  bool equivalent = false;
  Rational bound;          // sup_n |a_n - b_n|, exact (equivalent case)
  long long box = 0;       // |a_n - b_n| <= bound holds on 0..box and, by tail algebra, everywhere
  long long witness = -1;  // index with |a_n - b_n| > 10^6 (refutation case)
  std::string schedule;    // description of the divergence schedule
};
LinfVerdict decide_linf(const RealSeqRep& a, const RealSeqRep& b);

/// Index with |a_n - b_n| > threshold; requires an unbounded difference.
/// Scans windows of joint-period width at doubling offsets.
long long linf_divergence_witness(const RealSeqRep& a, const RealSeqRep& b, const Rational& threshold);

// ---------------------------------------------------------------------------
// Tail equivalence (agreement from some index on).

struct E1Verdict {
  bool equivalent = false;
  long long stabilization = 0;  // minimal N with a_n = b_n for all n >= N
  // Refutation: a_n != b_n for all n = probe_start + i*probe_period, i >= 0.
  long long probe_start = -1;
  long long probe_period = 0;
  std::string schedule;
};
E1Verdict decide_e1(const RealSeqRep& a, const RealSeqRep& b);

// ---------------------------------------------------------------------------
// Window-sum domination relation on extended-natural sequences.

enum class SigmaReason { InfCountMismatch, DensityMismatch, PrefixObstruction };
std::string to_string(SigmaReason r);

/// A concrete violated constraint: at enlargement k, inequality `side`
/// (1: sum(a) <= enlarged sum(b), 2: the mirror) fails at window (n, l).
struct SigmaWitness {
  BigInt k;
  int side = 1;
  BigInt n, l;
};

struct SigmaVerdict {
  bool equivalent = false;
  BigInt k;             // minimal verified enlargement (equivalent case)
  BigInt box_n, box_l;  // verified stabilization box for that k
  std::optional<SigmaReason> reason;
  std::vector<SigmaWitness> witnesses;  // one per k <= k_cap (refutation case)
  BigInt k_cap;
};

struct SigmaBoxResult {
  bool holds = true;
  // first violation in scan order (n outer, l inner, side 1 before 2)
  std::optional<SigmaWitness> first_violation;
};

/// Checks both window-sum inequalities for all 0 <= n <= n_max, 0 <= l <= l_max.
SigmaBoxResult esigma_box(const DimSeqRep& a, const DimSeqRep& b, const BigInt& k, const BigInt& n_max,
                          const BigInt& l_max);

SigmaVerdict decide_esigma(const DimSeqRep& a, const DimSeqRep& b);

/// Stabilization box for a fixed k: a box check over it decides the full
/// relation at that k (violations recur within one extra tail cycle).
struct SigmaBox {
  BigInt n_max, l_max;
};
SigmaBox esigma_stabilization_box(const DimSeqRep& a, const DimSeqRep& b, const BigInt& k);

/// Transitivity composition: candidate enlargement for (a, c) from verified
/// witnesses for (a, b) and (b, c). Callers re-verify via esigma_box.
inline BigInt compose_sigma_witnesses(const BigInt& k_ab, const BigInt& k_bc) { return k_ab + k_bc; }

}  // namespace dg

#endif
