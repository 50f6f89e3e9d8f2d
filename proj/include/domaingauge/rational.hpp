#ifndef DOMAINGAUGE_RATIONAL_HPP
#define DOMAINGAUGE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace dg {

// Exact arithmetic everywhere decisions are made; floating point is
// confined to the spectra module and to display.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// q^e for integer e (e may be negative; q must be nonzero then).
Rational rat_pow(const Rational& q, long long e);

/// Parses "7", "-3/4", "2.5", "-0.125" exactly. Throws ParseError otherwise.
Rational parse_rational(const std::string& text);

/// Canonical text form: integer "n" or fraction "n/d".
std::string rational_to_string(const Rational& q);

BigInt big_gcd(BigInt a, BigInt b);
BigInt big_lcm(const BigInt& a, const BigInt& b);

/// Smallest integer >= q.
BigInt rat_ceil(const Rational& q);
/// Largest integer <= q.
BigInt rat_floor(const Rational& q);

}  // namespace dg

#endif
