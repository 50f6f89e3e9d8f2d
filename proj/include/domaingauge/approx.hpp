#ifndef DOMAINGAUGE_APPROX_HPP
#define DOMAINGAUGE_APPROX_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "domaingauge/rational.hpp"

namespace dg {

// Certified outward rounding for the few places a bound is transcendental
// (exp/log of exact rationals). 100 decimal digits of working precision with
// a 1e-60 relative margin; the decisions themselves never depend on these.
using BigFloat = boost::multiprecision::cpp_bin_float_100;

inline BigFloat to_bigfloat(const Rational& q) {
  return BigFloat(num(q)) / BigFloat(den(q));
}

Rational bigfloat_to_rational(const BigFloat& x);

/// Rational upper bound on e^q, tight to ~1e-60 relative.
Rational exp_upper(const Rational& q);
/// Rational lower bound on e^q.
Rational exp_lower(const Rational& q);

/// Rational bounds on x (outward by ~1e-60 relative).
Rational round_up(const BigFloat& x);
Rational round_down(const BigFloat& x);

}  // namespace dg

#endif
