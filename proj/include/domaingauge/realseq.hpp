#ifndef DOMAINGAUGE_REALSEQ_HPP
#define DOMAINGAUGE_REALSEQ_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "domaingauge/rational.hpp"

namespace dg {

// Finitely represented infinite real sequence: an explicit prefix plus a
// closed-form tail. The tail value at offset i >= 0 (i.e. index len+i) is:
//   Const      v
//   Periodic   cycle[i mod p]
//   Affine     slope*i + intercept          (slope != 0 after normalization)
//   Geometric  coeff * ratio^i              (coeff > 0, ratio > 1)
//   Strided    inner((i - phase)/stride) at offsets i ≡ phase (mod stride), else 0
// Strided exists because interleaving a growing tail with zeros leaves the
// four base kinds; its inner tail is Affine or Geometric only (a strided
// Const/Periodic collapses into Periodic during normalization).

struct ConstTail {
  Rational value;
  bool operator==(const ConstTail&) const = default;
};
struct PeriodicTail {
  std::vector<Rational> cycle;  // normalized: not a repetition of a shorter cycle, size >= 2
  bool operator==(const PeriodicTail&) const = default;
};
struct AffineTail {
  Rational slope, intercept;
  bool operator==(const AffineTail&) const = default;
};
struct GeometricTail {
  Rational coeff, ratio;
  bool operator==(const GeometricTail&) const = default;
};
struct StridedTail {
  std::uint32_t stride = 2;  // >= 2 after normalization
  std::uint32_t phase = 0;   // < stride
  std::variant<AffineTail, GeometricTail> inner;
  bool operator==(const StridedTail&) const = default;
};

using RealTail = std::variant<ConstTail, PeriodicTail, AffineTail, GeometricTail, StridedTail>;

enum class TailClass { Const, Periodic, Affine, Geometric, Strided };

class RealSeqRep {
 public:
  RealSeqRep() : tail_(ConstTail{0}) {}
  /// Normalizes on construction; throws ParseError on out-of-class tails
  /// (geometric with coeff <= 0 or ratio <= 1, empty periodic cycle, ...).
  RealSeqRep(std::vector<Rational> prefix, RealTail tail);

  static RealSeqRep constant(const Rational& v) { return RealSeqRep({}, ConstTail{v}); }
  static RealSeqRep zero() { return constant(0); }

  const std::vector<Rational>& prefix() const { return prefix_; }
  const RealTail& tail() const { return tail_; }
  long long prefix_len() const { return static_cast<long long>(prefix_.size()); }
  TailClass tail_class() const;

  /// a_n; total for all n, with a_n = 0 for n < 0.
  Rational eval(long long n) const;

  /// a_n in double precision, computed from the tail descriptors directly
  /// (safe at indices where exact geometric evaluation would blow up).
  double eval_double(long long n) const;

  /// Cycle length for Periodic, stride for Strided, 1 otherwise.
  long long period() const;

  /// Smallest index from which the pure tail law applies (= prefix length).
  long long tail_start() const { return prefix_len(); }

  // Canonical absolute forms, valid for n >= tail_start():
  /// Affine tails as a_n = slope*n + intercept_abs.
  struct AbsAffine {
    Rational slope, intercept;
  };
  AbsAffine abs_affine() const;  // requires tail_class() == Affine
  /// Geometric tails as a_n = coeff_abs * ratio^n.
  struct AbsGeometric {
    Rational coeff, ratio;
  };
  AbsGeometric abs_geometric() const;  // requires tail_class() == Geometric

  /// Strided lane: indices n >= tail_start() with n ≡ residue (mod stride)
  /// carry the inner law; all other tail indices are zero.
  struct Lane {
    std::uint32_t stride;
    std::uint32_t residue;          // absolute residue class mod stride
    bool inner_affine;              // else geometric
    Rational a, b;                  // affine: value = a*n + b at lane points (a,b absolute)
    Rational geo_value_at_anchor;   // geometric: value at anchor index
    long long anchor;               // first lane index >= tail_start()
    Rational geo_step;              // ratio between consecutive lane points (= inner ratio)
  };
  Lane lane() const;  // requires tail_class() == Strided

  friend bool operator==(const RealSeqRep& a, const RealSeqRep& b) {
    return a.prefix_ == b.prefix_ && a.tail_ == b.tail_;
  }

 private:
  std::vector<Rational> prefix_;
  RealTail tail_;
};

/// Finite-box criterion for pointwise equality: evaluates both sequences on
/// 0 .. len_a+len_b+2*p_a*p_b+2 and compares. Equivalent to equality
/// everywhere for this representation class.
bool pointwise_equal(const RealSeqRep& a, const RealSeqRep& b);
/// Box width used by pointwise_equal (also the certificate verification box).
long long equality_box(const RealSeqRep& a, const RealSeqRep& b);

/// Some index where the two sequences differ; nullopt if pointwise equal.
std::optional<long long> first_difference(const RealSeqRep& a, const RealSeqRep& b);

/// True if every entry (prefix and tail) is nonnegative.
bool is_nonnegative(const RealSeqRep& s);

/// True if every entry is a natural number (used by dyadic weight forms).
bool is_natural_valued(const RealSeqRep& s);

}  // namespace dg

#endif
