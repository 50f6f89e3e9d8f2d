#include <algorithm>

#include "domaingauge/equiv.hpp"
#include "domaingauge/errors.hpp"

namespace dg {

namespace {

long long lcm_ll(long long a, long long b) {
  return (big_lcm(BigInt(a), BigInt(b))).convert_to<long long>();
}

E1Verdict eventually_equal_from(const RealSeqRep& a, const RealSeqRep& b, long long stab) {
  E1Verdict v;
  v.equivalent = true;
  long long n = stab;
  while (n > 0 && a.eval(n - 1) == b.eval(n - 1)) --n;
  v.stabilization = n;
  return v;
}

E1Verdict recurring_disagreement(const RealSeqRep& a, const RealSeqRep& b, long long start, long long period,
                                 std::string schedule) {
  // Guard the case analysis: the emitted schedule must actually disagree.
  for (int i = 0; i < 9; ++i) {
    long long n = start + static_cast<long long>(i) * period;
    if (a.eval(n) == b.eval(n))
      throw InternalInvariantFailure("tail-equivalence refutation schedule hit an agreement at index " +
                                     std::to_string(n));
  }
  E1Verdict v;
  v.equivalent = false;
  v.probe_start = start;
  v.probe_period = period;
  v.schedule = std::move(schedule);
  return v;
}

// First index n >= from with n ≡ residue (mod q).
long long align_up(long long from, long long residue, long long q) {
  long long r = ((from % q) + q) % q;
  long long delta = (residue - r + q) % q;
  return from + delta;
}

// Smallest integer index strictly beyond every root of (slope*n + intercept == v).
long long beyond_affine_root(const Rational& slope, const Rational& intercept, const Rational& v) {
  // slope != 0
  Rational root = (v - intercept) / slope;
  return rat_floor(root).convert_to<long long>() + 1;
}

}  // namespace

E1Verdict decide_e1(const RealSeqRep& a, const RealSeqRep& b) {
  const TailClass ka = a.tail_class(), kb = b.tail_class();
  const long long maxlen = std::max(a.prefix_len(), b.prefix_len());
  auto bounded_kind = [](TailClass k) { return k == TailClass::Const || k == TailClass::Periodic; };

  // Bounded-tail pair: beyond the prefixes both are L-periodic.
  if (bounded_kind(ka) && bounded_kind(kb)) {
    const long long L = lcm_ll(a.period(), b.period());
    for (long long n = maxlen; n < maxlen + L; ++n) {
      if (a.eval(n) != b.eval(n))
        return recurring_disagreement(a, b, n, L, "tails disagree on a full residue class of the joint period");
    }
    return eventually_equal_from(a, b, maxlen);
  }

  if (ka == TailClass::Affine && kb == TailClass::Affine) {
    auto fa = a.abs_affine(), fb = b.abs_affine();
    if (fa.slope == fb.slope && fa.intercept == fb.intercept) return eventually_equal_from(a, b, maxlen);
    long long start = maxlen;
    if (fa.slope != fb.slope)
      start = std::max(start, beyond_affine_root(fa.slope - fb.slope, fa.intercept - fb.intercept, Rational(0)));
    return recurring_disagreement(a, b, start, 1, "affine tails separate permanently beyond their crossing");
  }

  if (ka == TailClass::Geometric && kb == TailClass::Geometric) {
    auto ga = a.abs_geometric(), gb = b.abs_geometric();
    if (ga.ratio == gb.ratio && ga.coeff == gb.coeff) return eventually_equal_from(a, b, maxlen);
    if (ga.ratio == gb.ratio)
      return recurring_disagreement(a, b, maxlen, 1, "geometric tails with equal ratio but distinct coefficients");
    // distinct ratios: once the faster one is strictly ahead it stays ahead
    long long n = maxlen;
    const bool a_faster = ga.ratio > gb.ratio;
    while (true) {
      Rational va = a.eval(n), vb = b.eval(n);
      if ((a_faster && va > vb) || (!a_faster && vb > va))
        return recurring_disagreement(a, b, n, 1, "geometric tails with distinct ratios");
      n = n * 2 + 1;
      if (n > (1ll << 58)) throw InternalInvariantFailure("geometric dominance lock not found");
    }
  }

  // affine or geometric against a bounded tail, and affine against geometric
  auto growth_beats_bounded = [&](const RealSeqRep& g, const RealSeqRep& c, bool g_is_a) -> E1Verdict {
    // g has affine or geometric tail, c has const/periodic tail
    long long start = maxlen;
    if (g.tail_class() == TailClass::Affine) {
      auto f = g.abs_affine();
      for (long long i = 0; i < c.period(); ++i) {
        Rational v = c.eval(maxlen + i);
        start = std::max(start, beyond_affine_root(f.slope, f.intercept, v));
      }
    } else {
      // geometric: strictly increasing; scan forward until above the cycle maximum
      Rational vmax = c.eval(maxlen);
      for (long long i = 0; i < c.period(); ++i) vmax = std::max(vmax, c.eval(maxlen + i));
      while (g.eval(start) <= vmax) ++start;
    }
    return recurring_disagreement(g_is_a ? a : b, g_is_a ? b : a, start, 1,
                                  "a growing tail leaves the bounded tail's value set permanently");
  };
  if ((ka == TailClass::Affine || ka == TailClass::Geometric) && bounded_kind(kb))
    return growth_beats_bounded(a, b, true);
  if ((kb == TailClass::Affine || kb == TailClass::Geometric) && bounded_kind(ka))
    return growth_beats_bounded(b, a, false);

  if ((ka == TailClass::Affine && kb == TailClass::Geometric) || (ka == TailClass::Geometric && kb == TailClass::Affine)) {
    const RealSeqRep& geo = ka == TailClass::Geometric ? a : b;
    const RealSeqRep& aff = ka == TailClass::Geometric ? b : a;
    auto f = aff.abs_affine();
    auto g = geo.abs_geometric();
    long long n = maxlen;
    while (true) {
      // lock: geometric above the affine and growing faster than the affine increment
      Rational gv = geo.eval(n);
      if (gv > aff.eval(n) && gv * (g.ratio - 1) > f.slope)
        return recurring_disagreement(a, b, n, 1, "geometric tail dominates the affine tail permanently");
      n = n * 2 + 1;
      if (n > (1ll << 58)) throw InternalInvariantFailure("geometric/affine dominance lock not found");
    }
  }

  // Strided cases
  if (ka == TailClass::Strided && kb == TailClass::Strided) {
    auto la = a.lane(), lb = b.lane();
    const long long common = std::max(la.anchor, lb.anchor);
    if (la.stride == lb.stride && la.residue == lb.residue) {
      if (la.inner_affine && lb.inner_affine) {
        if (la.a == lb.a && la.b == lb.b) return eventually_equal_from(a, b, common);
        long long start = common;
        if (la.a != lb.a) {
          long long beyond = beyond_affine_root(la.a - lb.a, la.b - lb.b, Rational(0));
          start = std::max(start, align_up(std::max(common, beyond), la.residue, la.stride));
        }
        return recurring_disagreement(a, b, align_up(start, la.residue, la.stride), la.stride,
                                      "lane-affine tails separate on their shared lane");
      }
      if (!la.inner_affine && !lb.inner_affine) {
        // `common` is lane-aligned: both anchors sit on the shared residue class.
        if (la.geo_step == lb.geo_step) {
          if (a.eval(common) == b.eval(common)) return eventually_equal_from(a, b, common);
          return recurring_disagreement(a, b, common, la.stride,
                                        "lane-geometric tails with equal step but distinct values");
        }
        // distinct steps: once the faster lane is strictly ahead it stays ahead
        const bool a_faster = la.geo_step > lb.geo_step;
        long long n = common;
        while (true) {
          Rational va = a.eval(n), vb = b.eval(n);
          if ((a_faster && va > vb) || (!a_faster && vb > va))
            return recurring_disagreement(a, b, n, la.stride, "lane-geometric tails with distinct steps");
          n = align_up(n * 2 + 1, la.residue, la.stride);
          if (n > (1ll << 58)) throw InternalInvariantFailure("lane-geometric separation not found");
        }
      }
      // affine lane vs geometric lane: dominance along the lane
      const bool a_geo = !la.inner_affine;
      long long n = align_up(common, la.residue, la.stride);
      while (true) {
        Rational va = a.eval(n), vb = b.eval(n);
        const Rational& gv = a_geo ? va : vb;
        const Rational& fv = a_geo ? vb : va;
        const auto& gl = a_geo ? la : lb;
        const auto& fl = a_geo ? lb : la;
        if (gv > fv && gv * (gl.geo_step - 1) > fl.a * fl.stride)
          return recurring_disagreement(a, b, n, la.stride, "lane-geometric tail dominates the lane-affine tail");
        n = align_up(n * 2 + 1, la.residue, la.stride);
        if (n > (1ll << 58)) throw InternalInvariantFailure("lane dominance lock not found");
      }
    }
    // different lanes: some residue class (mod joint stride) is active in exactly one sequence
    const long long L = lcm_ll(la.stride, lb.stride);
    for (long long r = 0; r < L; ++r) {
      bool in_a = (r % la.stride) == la.residue;
      bool in_b = (r % lb.stride) == lb.residue;
      if (in_a == in_b) continue;
      const RealSeqRep& active = in_a ? a : b;
      auto lane = in_a ? la : lb;
      long long start = align_up(common, r, L);
      if (lane.inner_affine) {
        long long beyond = beyond_affine_root(lane.a, lane.b, Rational(0));
        start = align_up(std::max(start, beyond), r, L);
      }
      return recurring_disagreement(a, b, start, L, "a lane active in one sequence only carries growing values");
    }
    throw InternalInvariantFailure("distinct strided lanes without a separating residue class");
  }

  if (ka == TailClass::Strided || kb == TailClass::Strided) {
    const RealSeqRep& s = ka == TailClass::Strided ? a : b;
    const RealSeqRep& o = ka == TailClass::Strided ? b : a;
    auto l = s.lane();
    if (bounded_kind(o.tail_class())) {
      // along the lane the strided values leave o's bounded value set
      Rational vmax = o.eval(maxlen);
      Rational vmin = vmax;
      for (long long i = 0; i < o.period(); ++i) {
        Rational v = o.eval(maxlen + i);
        vmax = std::max(vmax, v);
        vmin = std::min(vmin, v);
      }
      long long start = align_up(std::max(l.anchor, maxlen), l.residue, l.stride);
      if (l.inner_affine) {
        long long beyond = start;
        for (long long i = 0; i < o.period(); ++i)
          beyond = std::max(beyond, beyond_affine_root(l.a, l.b, o.eval(maxlen + i)));
        start = align_up(beyond, l.residue, l.stride);
      } else {
        while (s.eval(start) <= vmax) start += l.stride;
      }
      return recurring_disagreement(a, b, start, l.stride, "lane values leave the bounded tail's value set");
    }
    // o is affine or geometric (everywhere-growing): pick an off-lane class where s is 0
    long long r = (l.residue + 1) % l.stride;
    long long start = align_up(std::max(maxlen, l.anchor), r, l.stride);
    if (o.tail_class() == TailClass::Affine) {
      auto f = o.abs_affine();
      start = align_up(std::max(start, beyond_affine_root(f.slope, f.intercept, Rational(0))), r, l.stride);
    }
    return recurring_disagreement(a, b, start, l.stride, "off-lane zeros against an everywhere-growing tail");
  }

  throw InternalInvariantFailure("unhandled tail pair in decide_e1");
}

}  // namespace dg
