#ifndef DOMAINGAUGE_DIMSEQ_HPP
#define DOMAINGAUGE_DIMSEQ_HPP

#include <optional>
#include <variant>
#include <vector>

#include "domaingauge/extnat.hpp"
#include "domaingauge/rational.hpp"

namespace dg {

// Finitely represented sequence over the extended naturals. Tails are
// restricted to Const (any ExtNat, including inf) and Periodic over finite
// values; this keeps every window-sum question decidable.

struct DimConstTail {
  ExtNat value;
  bool operator==(const DimConstTail&) const = default;
};
struct DimPeriodicTail {
  std::vector<ExtNat> cycle;  // all finite, normalized minimal period
  bool operator==(const DimPeriodicTail&) const = default;
};
using DimTail = std::variant<DimConstTail, DimPeriodicTail>;

class DimSeqRep {
 public:
  DimSeqRep() : tail_(DimConstTail{ExtNat(0)}) {}
  DimSeqRep(std::vector<ExtNat> prefix, DimTail tail);

  static DimSeqRep constant(const ExtNat& v) { return DimSeqRep({}, DimConstTail{v}); }
  static DimSeqRep zero() { return constant(ExtNat(0)); }

  const std::vector<ExtNat>& prefix() const { return prefix_; }
  const DimTail& tail() const { return tail_; }
  long long prefix_len() const { return static_cast<long long>(prefix_.size()); }
  bool tail_is_inf() const;
  bool tail_is_periodic() const { return std::holds_alternative<DimPeriodicTail>(tail_); }
  long long period() const;

  ExtNat eval(long long n) const;  // 0 for n < 0

  /// Mean of one tail cycle (finite tails only).
  Rational tail_mean() const;
  /// Sum over one tail cycle (finite tails only).
  BigInt tail_cycle_sum() const;
  /// Largest tail value (finite tails only).
  BigInt tail_max() const;

  /// Indices of infinite entries; only defined when tail is not Const(inf).
  std::vector<long long> inf_positions() const;

  friend bool operator==(const DimSeqRep& a, const DimSeqRep& b) {
    return a.prefix_ == b.prefix_ && a.tail_ == b.tail_;
  }

 private:
  std::vector<ExtNat> prefix_;
  DimTail tail_;
};

/// Finite-box pointwise equality (sound and complete for this class).
bool pointwise_equal(const DimSeqRep& a, const DimSeqRep& b);

/// Sum a_n + a_{n+1} + ... + a_{n+l}; indices below zero contribute 0.
/// n may be negative; l >= 0. Closed-form over tail cycles, so large l is cheap.
ExtNat window_sum(const DimSeqRep& s, const BigInt& n, const BigInt& l);

/// Number of infinite entries (inf iff the tail is Const(inf)).
ExtNat count_inf(const DimSeqRep& s);

/// Whether the total series diverges (membership in the paper-facing domain
/// of divergent-sum sequences).
bool diverges(const DimSeqRep& s);

}  // namespace dg

#endif
