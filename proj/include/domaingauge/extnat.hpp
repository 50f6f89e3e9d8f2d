#ifndef DOMAINGAUGE_EXTNAT_HPP
#define DOMAINGAUGE_EXTNAT_HPP

#include <compare>
#include <string>
#include <vector>

#include "domaingauge/rational.hpp"

namespace dg {

/// A natural number or infinity, with absorbing arithmetic:
/// inf + x = x + inf = inf, and 0 is the additive identity.
/// Finite values are arbitrary-precision, so sums never overflow.
class ExtNat {
 public:
  ExtNat() : value_(0), inf_(false) {}
  ExtNat(int v) : value_(v), inf_(false) { check_nonneg(); }
  ExtNat(long long v) : value_(v), inf_(false) { check_nonneg(); }
  explicit ExtNat(BigInt v) : value_(std::move(v)), inf_(false) { check_nonneg(); }

  static ExtNat infinity() {
    ExtNat e;
    e.inf_ = true;
    return e;
  }

  bool is_inf() const { return inf_; }
  bool is_zero() const { return !inf_ && value_ == 0; }

  /// Finite value; must not be called on infinity.
  const BigInt& finite() const;

  ExtNat& operator+=(const ExtNat& o);
  friend ExtNat operator+(ExtNat a, const ExtNat& b) { return a += b; }

  /// Product with the convention inf * 0 = 0 (count-style multiplication).
  friend ExtNat operator*(const ExtNat& a, const ExtNat& b);

  friend bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b);

  std::string str() const { return inf_ ? "inf" : value_.str(); }

 private:
  void check_nonneg() const;
  BigInt value_;
  bool inf_;
};

/// Saturating sum of a list; inf iff any summand is inf; empty sum is 0.
ExtNat extnat_sum(const std::vector<ExtNat>& values);

}  // namespace dg

#endif
