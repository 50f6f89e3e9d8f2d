#include "domaingauge/realseq.hpp"

#include <algorithm>
#include <cmath>

#include "domaingauge/errors.hpp"

namespace dg {

namespace {

// Smallest divisor d of cycle.size() such that the cycle is d-periodic.
std::size_t minimal_period(const std::vector<Rational>& cycle) {
  const std::size_t p = cycle.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = cycle[i] == cycle[i % d];
    if (ok) return d;
  }
  return p;
}

RealTail normalize_tail(RealTail tail) {
  if (auto* per = std::get_if<PeriodicTail>(&tail)) {
    if (per->cycle.empty()) throw ParseError("periodic tail needs at least one value");
    std::size_t d = minimal_period(per->cycle);
    per->cycle.resize(d);
    if (d == 1) return ConstTail{per->cycle[0]};
    return tail;
  }
  if (auto* aff = std::get_if<AffineTail>(&tail)) {
    if (aff->slope == 0) return ConstTail{aff->intercept};
    return tail;
  }
  if (auto* geo = std::get_if<GeometricTail>(&tail)) {
    if (geo->coeff <= 0) throw ParseError("geometric tail requires coeff > 0");
    if (geo->ratio <= 1) throw ParseError("geometric tail requires ratio > 1");
    return tail;
  }
  if (auto* st = std::get_if<StridedTail>(&tail)) {
    if (st->stride < 1) throw ParseError("strided tail requires stride >= 1");
    if (st->phase >= st->stride) throw ParseError("strided phase must be < stride");
    if (auto* ia = std::get_if<AffineTail>(&st->inner)) {
      if (ia->slope == 0) {
        // Constant on the lane, zero elsewhere: plain periodic cycle.
        std::vector<Rational> cycle(st->stride, Rational(0));
        cycle[st->phase] = ia->intercept;
        return normalize_tail(PeriodicTail{std::move(cycle)});
      }
    } else {
      auto& ig = std::get<GeometricTail>(st->inner);
      if (ig.coeff <= 0) throw ParseError("strided geometric inner requires coeff > 0");
      if (ig.ratio <= 1) throw ParseError("strided geometric inner requires ratio > 1");
    }
    if (st->stride == 1) {
      RealTail inner = std::visit([](const auto& t) -> RealTail { return t; }, st->inner);
      return normalize_tail(std::move(inner));
    }
    return tail;
  }
  return tail;
}

}  // namespace

RealSeqRep::RealSeqRep(std::vector<Rational> prefix, RealTail tail)
    : prefix_(std::move(prefix)), tail_(normalize_tail(std::move(tail))) {}

TailClass RealSeqRep::tail_class() const {
  return std::visit(
      [](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, ConstTail>) return TailClass::Const;
        if constexpr (std::is_same_v<T, PeriodicTail>) return TailClass::Periodic;
        if constexpr (std::is_same_v<T, AffineTail>) return TailClass::Affine;
        if constexpr (std::is_same_v<T, GeometricTail>) return TailClass::Geometric;
        if constexpr (std::is_same_v<T, StridedTail>) return TailClass::Strided;
      },
      tail_);
}

Rational RealSeqRep::eval(long long n) const {
  if (n < 0) return 0;
  if (n < prefix_len()) return prefix_[static_cast<std::size_t>(n)];
  const long long i = n - prefix_len();  // tail offset
  return std::visit(
      [&](const auto& t) -> Rational {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, ConstTail>) {
          return t.value;
        } else if constexpr (std::is_same_v<T, PeriodicTail>) {
          return t.cycle[static_cast<std::size_t>(i % static_cast<long long>(t.cycle.size()))];
        } else if constexpr (std::is_same_v<T, AffineTail>) {
          return t.slope * i + t.intercept;
        } else if constexpr (std::is_same_v<T, GeometricTail>) {
          return t.coeff * rat_pow(t.ratio, i);
        } else {
          const long long q = t.stride;
          if (i % q != t.phase) return 0;
          const long long j = (i - t.phase) / q;
          if (const auto* ia = std::get_if<AffineTail>(&t.inner)) return ia->slope * j + ia->intercept;
          const auto& ig = std::get<GeometricTail>(t.inner);
          return ig.coeff * rat_pow(ig.ratio, j);
        }
      },
      tail_);
}

double RealSeqRep::eval_double(long long n) const {
  if (n < 0) return 0.0;
  if (n < prefix_len()) return to_double(prefix_[static_cast<std::size_t>(n)]);
  const long long i = n - prefix_len();
  return std::visit(
      [&](const auto& t) -> double {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, ConstTail>) {
          return to_double(t.value);
        } else if constexpr (std::is_same_v<T, PeriodicTail>) {
          return to_double(t.cycle[static_cast<std::size_t>(i % static_cast<long long>(t.cycle.size()))]);
        } else if constexpr (std::is_same_v<T, AffineTail>) {
          return to_double(t.slope) * static_cast<double>(i) + to_double(t.intercept);
        } else if constexpr (std::is_same_v<T, GeometricTail>) {
          return std::exp(std::log(to_double(t.coeff)) + static_cast<double>(i) * std::log(to_double(t.ratio)));
        } else {
          const long long q = t.stride;
          if (i % q != t.phase) return 0.0;
          const double j = static_cast<double>((i - t.phase) / q);
          if (const auto* ia = std::get_if<AffineTail>(&t.inner))
            return to_double(ia->slope) * j + to_double(ia->intercept);
          const auto& ig = std::get<GeometricTail>(t.inner);
          return std::exp(std::log(to_double(ig.coeff)) + j * std::log(to_double(ig.ratio)));
        }
      },
      tail_);
}

long long RealSeqRep::period() const {
  if (const auto* per = std::get_if<PeriodicTail>(&tail_)) return static_cast<long long>(per->cycle.size());
  if (const auto* st = std::get_if<StridedTail>(&tail_)) return st->stride;
  return 1;
}

RealSeqRep::AbsAffine RealSeqRep::abs_affine() const {
  const auto& t = std::get<AffineTail>(tail_);
  // value at n = slope*(n - len) + intercept
  return {t.slope, t.intercept - t.slope * prefix_len()};
}

RealSeqRep::AbsGeometric RealSeqRep::abs_geometric() const {
  const auto& t = std::get<GeometricTail>(tail_);
  return {t.coeff * rat_pow(t.ratio, -prefix_len()), t.ratio};
}

RealSeqRep::Lane RealSeqRep::lane() const {
  const auto& st = std::get<StridedTail>(tail_);
  Lane l;
  l.stride = st.stride;
  l.residue = static_cast<std::uint32_t>((prefix_len() + st.phase) % st.stride);
  l.anchor = prefix_len() + st.phase;
  if (const auto* ia = std::get_if<AffineTail>(&st.inner)) {
    l.inner_affine = true;
    // lane point n = anchor + stride*j carries slope*j + intercept
    // => value = (slope/stride)*n + (intercept - slope*anchor/stride)
    l.a = ia->slope / st.stride;
    l.b = ia->intercept - ia->slope * Rational(l.anchor, st.stride);
    l.geo_step = 0;
  } else {
    const auto& ig = std::get<GeometricTail>(st.inner);
    l.inner_affine = false;
    l.a = l.b = 0;
    l.geo_value_at_anchor = ig.coeff;
    l.geo_step = ig.ratio;
  }
  return l;
}

long long equality_box(const RealSeqRep& a, const RealSeqRep& b) {
  return a.prefix_len() + b.prefix_len() + 2 * a.period() * b.period() + 2;
}

bool pointwise_equal(const RealSeqRep& a, const RealSeqRep& b) {
  const long long box = equality_box(a, b);
  for (long long n = 0; n <= box; ++n)
    if (a.eval(n) != b.eval(n)) return false;
  return true;
}

std::optional<long long> first_difference(const RealSeqRep& a, const RealSeqRep& b) {
  const long long box = equality_box(a, b);
  for (long long n = 0; n <= box; ++n)
    if (a.eval(n) != b.eval(n)) return n;
  return std::nullopt;
}

bool is_nonnegative(const RealSeqRep& s) {
  for (const auto& v : s.prefix())
    if (v < 0) return false;
  switch (s.tail_class()) {
    case TailClass::Const:
      return std::get<ConstTail>(s.tail()).value >= 0;
    case TailClass::Periodic: {
      for (const auto& v : std::get<PeriodicTail>(s.tail()).cycle)
        if (v < 0) return false;
      return true;
    }
    case TailClass::Affine: {
      const auto& t = std::get<AffineTail>(s.tail());
      return t.slope > 0 ? t.intercept >= 0 : false;  // slope<0 goes to -inf
    }
    case TailClass::Geometric:
      return true;  // coeff > 0, ratio > 1
    case TailClass::Strided: {
      const auto& st = std::get<StridedTail>(s.tail());
      if (const auto* ia = std::get_if<AffineTail>(&st.inner))
        return ia->slope > 0 && ia->intercept >= 0;
      return true;
    }
  }
  return false;
}

bool is_natural_valued(const RealSeqRep& s) {
  auto is_nat = [](const Rational& v) { return v >= 0 && den(v) == 1; };
  for (const auto& v : s.prefix())
    if (!is_nat(v)) return false;
  switch (s.tail_class()) {
    case TailClass::Const:
      return is_nat(std::get<ConstTail>(s.tail()).value);
    case TailClass::Periodic: {
      for (const auto& v : std::get<PeriodicTail>(s.tail()).cycle)
        if (!is_nat(v)) return false;
      return true;
    }
    case TailClass::Affine: {
      const auto& t = std::get<AffineTail>(s.tail());
      return is_nat(t.slope) && is_nat(t.intercept);
    }
    case TailClass::Geometric: {
      const auto& t = std::get<GeometricTail>(s.tail());
      return is_nat(t.coeff) && is_nat(t.ratio);
    }
    case TailClass::Strided: {
      const auto& st = std::get<StridedTail>(s.tail());
      if (const auto* ia = std::get_if<AffineTail>(&st.inner)) return is_nat(ia->slope) && is_nat(ia->intercept);
      const auto& ig = std::get<GeometricTail>(st.inner);
      return is_nat(ig.coeff) && is_nat(ig.ratio);
    }
  }
  return false;
}

}  // namespace dg
