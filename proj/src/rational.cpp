#include "domaingauge/rational.hpp"

#include <cctype>

#include "domaingauge/errors.hpp"

namespace dg {

Rational rat_pow(const Rational& q, long long e) {
  if (e == 0) return Rational(1);
  if (q == 0) {
    if (e < 0) throw std::domain_error("rat_pow: 0 to a negative power");
    return Rational(0);
  }
  bool invert = e < 0;
  unsigned long long k = invert ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Rational base = q, acc = 1;
  while (k > 0) {
    if (k & 1ull) acc *= base;
    base *= base;
    k >>= 1;
  }
  if (invert) acc = Rational(1) / acc;
  return acc;
}

namespace {

bool is_integer_text(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // strip surrounding whitespace
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw ParseError("empty rational literal");
  s = s.substr(b, e - b + 1);

  bool neg = false;
  size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    neg = s[pos] == '-';
    ++pos;
  }
  size_t slash = s.find('/', pos);
  size_t dot = s.find('.', pos);
  try {
    if (slash != std::string::npos) {
      if (dot != std::string::npos) throw ParseError("mixed '/' and '.' in rational: " + text);
      if (!is_integer_text(s, pos, slash) || !is_integer_text(s, slash + 1, s.size()))
        throw ParseError("bad fraction literal: " + text);
      BigInt n(s.substr(pos, slash - pos));
      BigInt d(s.substr(slash + 1));
      if (d == 0) throw ParseError("zero denominator: " + text);
      Rational q(n, d);
      return neg ? Rational(-q) : q;
    }
    if (dot != std::string::npos) {
      std::string ip = s.substr(pos, dot - pos);
      std::string fp = s.substr(dot + 1);
      if (ip.empty() && fp.empty()) throw ParseError("bad decimal literal: " + text);
      if (!ip.empty() && !is_integer_text(ip, 0, ip.size())) throw ParseError("bad decimal literal: " + text);
      if (!fp.empty() && !is_integer_text(fp, 0, fp.size())) throw ParseError("bad decimal literal: " + text);
      BigInt n = ip.empty() ? BigInt(0) : BigInt(ip);
      BigInt scale = 1;
      for (char c : fp) {
        n = n * 10 + (c - '0');
        scale *= 10;
      }
      Rational q(n, scale);
      return neg ? Rational(-q) : q;
    }
    if (!is_integer_text(s, pos, s.size())) throw ParseError("bad integer literal: " + text);
    Rational q{BigInt(s.substr(pos))};
    return neg ? Rational(-q) : q;
  } catch (const std::exception& ex) {
    throw ParseError(std::string("cannot parse rational '") + text + "': " + ex.what());
  }
}

std::string rational_to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return boost::multiprecision::gcd(a, b);
}

BigInt big_lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

BigInt rat_floor(const Rational& q) {
  BigInt n = num(q), d = den(q);
  BigInt t = n / d;
  if (n < 0 && t * d != n) --t;
  return t;
}

BigInt rat_ceil(const Rational& q) {
  BigInt n = num(q), d = den(q);
  BigInt t = n / d;
  if (n > 0 && t * d != n) ++t;
  return t;
}

}  // namespace dg
