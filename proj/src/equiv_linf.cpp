#include <algorithm>

#include "domaingauge/equiv.hpp"
#include "domaingauge/errors.hpp"

namespace dg {

namespace {

long long lcm_ll(long long a, long long b) {
  return (big_lcm(BigInt(a), BigInt(b))).convert_to<long long>();
}

// Extrema of (a_n - b_n) over 0..hi plus optionally extra candidate values.
DiffBounds box_extrema(const RealSeqRep& a, const RealSeqRep& b, long long hi,
                       const std::vector<Rational>& extra) {
  DiffBounds r;
  r.bounded = true;
  bool first = true;
  auto feed = [&](const Rational& d) {
    if (first) {
      r.sup = r.inf = d;
      first = false;
    } else {
      if (d > r.sup) r.sup = d;
      if (d < r.inf) r.inf = d;
    }
  };
  for (long long n = 0; n <= hi; ++n) feed(a.eval(n) - b.eval(n));
  for (const auto& d : extra) feed(d);
  return r;
}

struct LaneView {
  bool valid = false;
  RealSeqRep::Lane lane;
};

LaneView lane_of(const RealSeqRep& s) {
  LaneView v;
  if (s.tail_class() == TailClass::Strided) {
    v.valid = true;
    v.lane = s.lane();
  }
  return v;
}

bool same_lane(const RealSeqRep::Lane& x, const RealSeqRep::Lane& y) {
  return x.stride == y.stride && x.residue == y.residue;
}

// Value of a strided-geometric sequence at an absolute lane index n
// (n must be >= anchor and on the lane).
Rational lane_geo_value(const RealSeqRep::Lane& l, long long n) {
  long long j = (n - l.anchor) / l.stride;
  return l.geo_value_at_anchor * rat_pow(l.geo_step, j);
}

}  // namespace

DiffBounds diff_bounds(const RealSeqRep& a, const RealSeqRep& b) {
  const TailClass ka = a.tail_class(), kb = b.tail_class();
  const long long maxlen = std::max(a.prefix_len(), b.prefix_len());
  auto bounded_kind = [](TailClass k) { return k == TailClass::Const || k == TailClass::Periodic; };

  if (bounded_kind(ka) && bounded_kind(kb)) {
    const long long L = lcm_ll(a.period(), b.period());
    return box_extrema(a, b, maxlen + L - 1, {});
  }
  if (ka == TailClass::Affine && kb == TailClass::Affine) {
    auto fa = a.abs_affine(), fb = b.abs_affine();
    if (fa.slope != fb.slope) return {};
    // difference is constant beyond the prefixes
    return box_extrema(a, b, maxlen, {fa.intercept - fb.intercept});
  }
  if (ka == TailClass::Geometric && kb == TailClass::Geometric) {
    auto ga = a.abs_geometric(), gb = b.abs_geometric();
    if (ga.ratio != gb.ratio || ga.coeff != gb.coeff) return {};
    return box_extrema(a, b, maxlen, {Rational(0)});
  }
  if (ka == TailClass::Strided && kb == TailClass::Strided) {
    auto la = a.lane(), lb = b.lane();
    if (!same_lane(la, lb)) return {};
    const long long common = std::max(la.anchor, lb.anchor);
    if (la.inner_affine && lb.inner_affine) {
      if (la.a != lb.a) return {};
      return box_extrema(a, b, common, {la.b - lb.b, Rational(0)});
    }
    if (!la.inner_affine && !lb.inner_affine) {
      if (la.geo_step != lb.geo_step) return {};
      if (lane_geo_value(la, common) != lane_geo_value(lb, common)) return {};
      return box_extrema(a, b, common, {Rational(0)});
    }
    return {};  // affine lane against geometric lane diverges
  }
  return {};  // any remaining kind pair has unbounded difference
}

namespace {

std::string schedule_text(const RealSeqRep& a, const RealSeqRep& b) {
  auto nm = [](TailClass k) {
    switch (k) {
      case TailClass::Const: return "const";
      case TailClass::Periodic: return "periodic";
      case TailClass::Affine: return "affine";
      case TailClass::Geometric: return "geometric";
      case TailClass::Strided: return "strided";
    }
    return "?";
  };
  return std::string("|a_n - b_n| is unbounded: tail classes ") + nm(a.tail_class()) + " vs " + nm(b.tail_class()) +
         " diverge; the difference exceeds any bound on a recurring schedule";
}

}  // namespace

// Scans windows of combined-period width at doubling offsets, so lane
// structure cannot hide the divergence.
long long linf_divergence_witness(const RealSeqRep& a, const RealSeqRep& b, const Rational& threshold) {
  const long long maxlen = std::max(a.prefix_len(), b.prefix_len());
  const long long width = 2 * lcm_ll(a.period(), b.period()) + 2;
  for (long long base = maxlen + 1;; base = base * 2 + 1) {
    for (long long n = base; n < base + width; ++n) {
      if (rat_abs(a.eval(n) - b.eval(n)) > threshold) return n;
    }
    if (base > (1ll << 60)) throw InternalInvariantFailure("divergence witness not found");
  }
}

LinfVerdict decide_linf(const RealSeqRep& a, const RealSeqRep& b) {
  LinfVerdict v;
  DiffBounds d = diff_bounds(a, b);
  if (d.bounded) {
    v.equivalent = true;
    v.bound = std::max(rat_abs(d.sup), rat_abs(d.inf));
    v.box = equality_box(a, b);
    return v;
  }
  v.equivalent = false;
  v.witness = linf_divergence_witness(a, b, Rational(kLinfWitnessThreshold));
  v.schedule = schedule_text(a, b);
  return v;
}

}  // namespace dg
