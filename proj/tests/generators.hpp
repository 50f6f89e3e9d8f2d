#ifndef DOMAINGAUGE_TEST_GENERATORS_HPP
#define DOMAINGAUGE_TEST_GENERATORS_HPP

#include <random>
#include <vector>

#include "domaingauge/dimseq.hpp"
#include "domaingauge/realseq.hpp"

namespace dg::testgen {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline Rational small_rational(Rng& rng, long long num_mag = 8, long long den_max = 4) {
  long long n = uniform(rng, -num_mag, num_mag);
  long long d = uniform(rng, 1, den_max);
  return Rational(n, d);
}

inline Rational positive_rational(Rng& rng, long long num_max = 6, long long den_max = 3) {
  long long n = uniform(rng, 1, num_max);
  long long d = uniform(rng, 1, den_max);
  return Rational(n, d);
}

inline std::vector<Rational> random_prefix(Rng& rng, long long max_len = 4) {
  std::vector<Rational> p(static_cast<std::size_t>(uniform(rng, 0, max_len)));
  for (auto& v : p) v = small_rational(rng);
  return p;
}

inline RealTail random_real_tail(Rng& rng, bool allow_strided = true) {
  switch (uniform(rng, 0, allow_strided ? 4 : 3)) {
    case 0: return ConstTail{small_rational(rng)};
    case 1: {
      std::vector<Rational> cyc(static_cast<std::size_t>(uniform(rng, 1, 4)));
      for (auto& v : cyc) v = small_rational(rng);
      return PeriodicTail{cyc};
    }
    case 2: return AffineTail{small_rational(rng, 4, 3), small_rational(rng)};
    case 3: {
      Rational ratio = Rational(1) + positive_rational(rng, 4, 2);
      return GeometricTail{positive_rational(rng), ratio};
    }
    default: {
      std::uint32_t stride = static_cast<std::uint32_t>(uniform(rng, 2, 4));
      std::uint32_t phase = static_cast<std::uint32_t>(uniform(rng, 0, stride - 1));
      if (uniform(rng, 0, 1) == 0) {
        Rational s = small_rational(rng, 3, 2);
        if (s == 0) s = 1;
        return StridedTail{stride, phase, AffineTail{s, small_rational(rng)}};
      }
      return StridedTail{stride, phase, GeometricTail{positive_rational(rng, 3, 2), Rational(1) + positive_rational(rng, 3, 1)}};
    }
  }
}

inline RealSeqRep random_real_seq(Rng& rng, bool allow_strided = true) {
  return RealSeqRep(random_prefix(rng), random_real_tail(rng, allow_strided));
}

/// A sequence within bounded distance of s: same tail, perturbed prefix.
/// The prefix may only grow when that leaves the absolute tail law intact
/// (a longer prefix shifts where the tail starts).
inline RealSeqRep bounded_perturbation(Rng& rng, const RealSeqRep& s) {
  auto prefix = s.prefix();
  TailClass k = s.tail_class();
  bool may_grow = k == TailClass::Const || k == TailClass::Periodic || k == TailClass::Affine;
  long long grow = may_grow ? uniform(rng, 0, 3) : 0;
  for (long long i = 0; i < grow; ++i) prefix.push_back(s.eval(s.prefix_len() + i));
  for (auto& v : prefix) v += small_rational(rng, 5, 2);
  RealTail tail = s.tail();
  // shifting every entry by a constant keeps the difference bounded for
  // const/periodic/affine tails (geometric and strided lanes stay exact)
  if (uniform(rng, 0, 1) == 0) {
    Rational c = small_rational(rng, 5, 2);
    if (auto* ct = std::get_if<ConstTail>(&tail)) ct->value += c;
    else if (auto* pt = std::get_if<PeriodicTail>(&tail))
      for (auto& v : pt->cycle) v += c;
    else if (auto* at = std::get_if<AffineTail>(&tail))
      at->intercept += c;
  }
  return RealSeqRep(std::move(prefix), std::move(tail));
}

inline ExtNat random_extnat(Rng& rng, long long max_v = 3, int inf_percent = 10) {
  if (uniform(rng, 0, 99) < inf_percent) return ExtNat::infinity();
  return ExtNat(uniform(rng, 0, max_v));
}

inline DimSeqRep random_dim_seq(Rng& rng, int inf_percent = 15) {
  std::vector<ExtNat> prefix(static_cast<std::size_t>(uniform(rng, 0, 4)));
  for (auto& v : prefix) v = random_extnat(rng, 3, inf_percent);
  DimTail tail;
  switch (uniform(rng, 0, 2)) {
    case 0: tail = DimConstTail{ExtNat(uniform(rng, 0, 3))}; break;
    case 1: tail = DimConstTail{ExtNat::infinity()}; break;
    default: {
      std::vector<ExtNat> cyc(static_cast<std::size_t>(uniform(rng, 1, 4)));
      for (auto& v : cyc) v = ExtNat(uniform(rng, 0, 3));
      tail = DimPeriodicTail{cyc};
    }
  }
  return DimSeqRep(std::move(prefix), std::move(tail));
}

/// An E_sigma-equivalent neighbour: prepend zeros (dimension shift) and/or
/// move finite prefix mass to an adjacent slot.
inline DimSeqRep sigma_equivalent_neighbour(Rng& rng, const DimSeqRep& s) {
  std::vector<ExtNat> prefix = s.prefix();
  if (uniform(rng, 0, 1) == 0) prefix.insert(prefix.begin(), ExtNat(0));
  if (prefix.size() >= 2) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(prefix.size()) - 2));
    if (!prefix[i].is_inf() && !prefix[i].is_zero()) {
      BigInt take = 1;
      prefix[i] = ExtNat(prefix[i].finite() - take);
      if (!prefix[i + 1].is_inf()) prefix[i + 1] = ExtNat(prefix[i + 1].finite() + take);
    }
  }
  return DimSeqRep(std::move(prefix), s.tail());
}

/// Random divergent dimension sequence with a prescribed number of infinite
/// entries (count < 0 means an all-infinite tail).
inline DimSeqRep divergent_dim_seq(Rng& rng, int inf_count) {
  if (inf_count < 0) {
    std::vector<ExtNat> prefix(static_cast<std::size_t>(uniform(rng, 0, 3)));
    for (auto& v : prefix) v = ExtNat(uniform(rng, 0, 3));
    return DimSeqRep(std::move(prefix), DimConstTail{ExtNat::infinity()});
  }
  long long len = uniform(rng, inf_count, inf_count + 3);
  std::vector<ExtNat> prefix(static_cast<std::size_t>(len));
  for (auto& v : prefix) v = ExtNat(uniform(rng, 0, 3));
  for (int i = 0; i < inf_count; ++i) {
    long long at = uniform(rng, 0, len - 1);
    prefix[static_cast<std::size_t>(at)] = ExtNat::infinity();
  }
  // keep the total divergent: a nonzero tail
  DimTail tail;
  if (uniform(rng, 0, 1) == 0) {
    tail = DimConstTail{ExtNat(uniform(rng, 1, 3))};
  } else {
    std::vector<ExtNat> cyc(static_cast<std::size_t>(uniform(rng, 2, 4)));
    for (auto& v : cyc) v = ExtNat(uniform(rng, 0, 2));
    cyc[0] = ExtNat(uniform(rng, 1, 3));
    tail = DimPeriodicTail{cyc};
  }
  DimSeqRep out(std::move(prefix), std::move(tail));
  // the requested count must survive (an entry may have been overwritten)
  if (count_inf(out) != ExtNat(inf_count)) return divergent_dim_seq(rng, inf_count);
  return out;
}

}  // namespace dg::testgen

#endif
