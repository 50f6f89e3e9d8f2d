#include "domaingauge/dimseq.hpp"

#include <algorithm>

#include "domaingauge/errors.hpp"

namespace dg {

namespace {

std::size_t minimal_period(const std::vector<ExtNat>& cycle) {
  const std::size_t p = cycle.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = cycle[i] == cycle[i % d];
    if (ok) return d;
  }
  return p;
}

DimTail normalize_tail(DimTail tail) {
  if (auto* per = std::get_if<DimPeriodicTail>(&tail)) {
    if (per->cycle.empty()) throw ParseError("periodic tail needs at least one value");
    for (const auto& v : per->cycle)
      if (v.is_inf()) throw ParseError("periodic dim tail admits finite values only");
    std::size_t d = minimal_period(per->cycle);
    per->cycle.resize(d);
    if (d == 1) return DimConstTail{per->cycle[0]};
  }
  return tail;
}

}  // namespace

DimSeqRep::DimSeqRep(std::vector<ExtNat> prefix, DimTail tail)
    : prefix_(std::move(prefix)), tail_(normalize_tail(std::move(tail))) {}

bool DimSeqRep::tail_is_inf() const {
  const auto* c = std::get_if<DimConstTail>(&tail_);
  return c != nullptr && c->value.is_inf();
}

long long DimSeqRep::period() const {
  if (const auto* per = std::get_if<DimPeriodicTail>(&tail_)) return static_cast<long long>(per->cycle.size());
  return 1;
}

ExtNat DimSeqRep::eval(long long n) const {
  if (n < 0) return ExtNat(0);
  if (n < prefix_len()) return prefix_[static_cast<std::size_t>(n)];
  const long long i = n - prefix_len();
  if (const auto* c = std::get_if<DimConstTail>(&tail_)) return c->value;
  const auto& cyc = std::get<DimPeriodicTail>(tail_).cycle;
  return cyc[static_cast<std::size_t>(i % static_cast<long long>(cyc.size()))];
}

Rational DimSeqRep::tail_mean() const {
  return Rational(tail_cycle_sum(), BigInt(period()));
}

BigInt DimSeqRep::tail_cycle_sum() const {
  if (const auto* c = std::get_if<DimConstTail>(&tail_)) {
    if (c->value.is_inf()) throw InternalInvariantFailure("tail_cycle_sum on Const(inf)");
    return c->value.finite();
  }
  BigInt s = 0;
  for (const auto& v : std::get<DimPeriodicTail>(tail_).cycle) s += v.finite();
  return s;
}

BigInt DimSeqRep::tail_max() const {
  if (const auto* c = std::get_if<DimConstTail>(&tail_)) {
    if (c->value.is_inf()) throw InternalInvariantFailure("tail_max on Const(inf)");
    return c->value.finite();
  }
  BigInt m = 0;
  for (const auto& v : std::get<DimPeriodicTail>(tail_).cycle) m = std::max(m, v.finite());
  return m;
}

std::vector<long long> DimSeqRep::inf_positions() const {
  if (tail_is_inf()) throw InternalInvariantFailure("inf_positions on Const(inf) tail");
  std::vector<long long> pos;
  for (long long i = 0; i < prefix_len(); ++i)
    if (prefix_[static_cast<std::size_t>(i)].is_inf()) pos.push_back(i);
  return pos;
}

bool pointwise_equal(const DimSeqRep& a, const DimSeqRep& b) {
  const long long box = a.prefix_len() + b.prefix_len() + 2 * a.period() * b.period() + 2;
  for (long long n = 0; n <= box; ++n)
    if (!(a.eval(n) == b.eval(n))) return false;
  return true;
}

namespace {

// Sum of the tail over tail offsets [o1, o2] (both >= 0), closed form.
ExtNat tail_range_sum(const DimSeqRep& s, const BigInt& o1, const BigInt& o2) {
  if (o2 < o1) return ExtNat(0);
  if (const auto* c = std::get_if<DimConstTail>(&s.tail())) {
    if (c->value.is_inf()) return ExtNat::infinity();
    return ExtNat(c->value.finite() * (o2 - o1 + 1));
  }
  const auto& cyc = std::get<DimPeriodicTail>(s.tail()).cycle;
  const BigInt p(static_cast<long long>(cyc.size()));
  BigInt count = o2 - o1 + 1;
  BigInt full = count / p;
  BigInt cycle_sum = 0;
  for (const auto& v : cyc) cycle_sum += v.finite();
  BigInt acc = full * cycle_sum;
  BigInt rem = count % p;
  BigInt start = o1 % p;
  for (BigInt i = 0; i < rem; ++i) {
    BigInt idx = (start + i) % p;
    acc += cyc[idx.convert_to<std::size_t>()].finite();
  }
  return ExtNat(acc);
}

}  // namespace

ExtNat window_sum(const DimSeqRep& s, const BigInt& n, const BigInt& l) {
  if (l < 0) throw InternalInvariantFailure("window_sum requires l >= 0");
  BigInt lo = n < 0 ? BigInt(0) : n;
  BigInt hi = n + l;
  if (hi < lo) return ExtNat(0);
  ExtNat acc(0);
  const BigInt len(s.prefix_len());
  // prefix part
  if (lo < len) {
    BigInt p_hi = hi < len - 1 ? hi : BigInt(len - 1);
    for (BigInt i = lo; i <= p_hi; ++i) acc += s.eval(i.convert_to<long long>());
    if (acc.is_inf()) return acc;
  }
  // tail part
  if (hi >= len) {
    BigInt t_lo = lo > len ? lo - len : BigInt(0);
    BigInt t_hi = hi - len;
    acc += tail_range_sum(s, t_lo, t_hi);
  }
  return acc;
}

ExtNat count_inf(const DimSeqRep& s) {
  if (s.tail_is_inf()) return ExtNat::infinity();
  long long c = 0;
  for (const auto& v : s.prefix())
    if (v.is_inf()) ++c;
  return ExtNat(c);
}

bool diverges(const DimSeqRep& s) {
  if (count_inf(s) >= ExtNat(1)) return true;
  if (s.tail_is_inf()) return true;
  return s.tail_cycle_sum() >= 1;
}

}  // namespace dg
