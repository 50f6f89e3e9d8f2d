#include "domaingauge/approx.hpp"

namespace dg {

namespace {

const BigFloat kMargin("1e-60");

}  // namespace

Rational bigfloat_to_rational(const BigFloat& x) {
  // cpp_bin_float mantissas are dyadic: extract via frexp to stay exact
  int e = 0;
  BigFloat m = frexp(x, &e);
  // m in [0.5, 1); scale to an integer
  const int digits = std::numeric_limits<BigFloat>::digits;
  BigFloat scaled = ldexp(m, digits);
  BigInt mant = scaled.convert_to<BigInt>();
  Rational q(mant);
  int shift = e - digits;
  if (shift >= 0) {
    q *= rat_pow(Rational(2), shift);
  } else {
    q /= rat_pow(Rational(2), -shift);
  }
  return q;
}

Rational round_up(const BigFloat& x) {
  BigFloat pad = abs(x) * kMargin + BigFloat(kMargin);
  return bigfloat_to_rational(x + pad);
}

Rational round_down(const BigFloat& x) {
  BigFloat pad = abs(x) * kMargin + BigFloat(kMargin);
  return bigfloat_to_rational(x - pad);
}

Rational exp_upper(const Rational& q) { return round_up(exp(to_bigfloat(q))); }

Rational exp_lower(const Rational& q) { return round_down(exp(to_bigfloat(q))); }

}  // namespace dg
