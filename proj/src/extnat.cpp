#include "domaingauge/extnat.hpp"

#include "domaingauge/errors.hpp"

namespace dg {

void ExtNat::check_nonneg() const {
  if (value_ < 0) throw ParseError("ExtNat value must be nonnegative");
}

const BigInt& ExtNat::finite() const {
  if (inf_) throw InternalInvariantFailure("ExtNat::finite() on infinity");
  return value_;
}

ExtNat& ExtNat::operator+=(const ExtNat& o) {
  if (o.inf_) inf_ = true;
  if (!inf_) value_ += o.value_;
  return *this;
}

ExtNat operator*(const ExtNat& a, const ExtNat& b) {
  if (a.is_zero() || b.is_zero()) return ExtNat(0);
  if (a.inf_ || b.inf_) return ExtNat::infinity();
  return ExtNat(a.value_ * b.value_);
}

std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
  if (a.inf_ && b.inf_) return std::strong_ordering::equal;
  if (a.inf_) return std::strong_ordering::greater;
  if (b.inf_) return std::strong_ordering::less;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExtNat extnat_sum(const std::vector<ExtNat>& values) {
  ExtNat acc;
  for (const auto& v : values) acc += v;
  return acc;
}

}  // namespace dg
