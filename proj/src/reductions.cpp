#include "domaingauge/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "domaingauge/approx.hpp"
#include "domaingauge/errors.hpp"

namespace dg {

namespace {

void append_pair(std::vector<Rational>& out, const Rational& v) {
  if (v >= 0) {
    out.push_back(v);
    out.push_back(0);
  } else {
    out.push_back(0);
    out.push_back(-v);
  }
}

}  // namespace

TildeImage tilde(const RealSeqRep& x) {
  std::vector<Rational> prefix;
  // input indices [0, ext) are mapped pairwise into the output prefix; ext is
  // pushed past any early sign changes so the remaining tail has one sign
  long long ext = x.prefix_len();
  RealTail out_tail = ConstTail{0};

  switch (x.tail_class()) {
    case TailClass::Const: {
      const Rational v = std::get<ConstTail>(x.tail()).value;
      out_tail = v >= 0 ? PeriodicTail{{v, Rational(0)}} : PeriodicTail{{Rational(0), -v}};
      break;
    }
    case TailClass::Periodic: {
      std::vector<Rational> cycle;
      for (long long i = 0; i < x.period(); ++i) append_pair(cycle, x.eval(x.tail_start() + i));
      out_tail = PeriodicTail{std::move(cycle)};
      break;
    }
    case TailClass::Affine: {
      auto f = x.abs_affine();
      // extend past the sign change of slope*n + intercept
      Rational root = -f.intercept / f.slope;
      ext = std::max(ext, rat_floor(root).convert_to<long long>() + 1);
      const Rational v0 = rat_abs(x.eval(ext));
      out_tail = StridedTail{2, static_cast<std::uint32_t>(f.slope > 0 ? 0 : 1), AffineTail{rat_abs(f.slope), v0}};
      break;
    }
    case TailClass::Geometric: {
      const auto& g = std::get<GeometricTail>(x.tail());
      out_tail = StridedTail{2, 0, GeometricTail{g.coeff, g.ratio}};
      break;
    }
    case TailClass::Strided: {
      auto lane = x.lane();
      if (!lane.inner_affine) {
        const auto& st = std::get<StridedTail>(x.tail());
        const auto& ig = std::get<GeometricTail>(st.inner);
        out_tail = StridedTail{2 * st.stride, 2 * st.phase, GeometricTail{ig.coeff, ig.ratio}};
        break;
      }
      // lane values lane.a * n + lane.b: extend past their sign change
      {
        Rational root = -lane.b / lane.a;
        ext = std::max(ext, rat_floor(root).convert_to<long long>() + 1);
      }
      // first lane point at input index >= ext
      long long n0 = ext;
      while ((n0 % lane.stride) != lane.residue) ++n0;
      const bool nonneg = lane.a > 0;
      const Rational v0 = rat_abs(x.eval(n0));
      const std::uint32_t stride = 2 * lane.stride;
      const std::uint32_t phase =
          static_cast<std::uint32_t>(2 * (n0 - ext) + (nonneg ? 0 : 1));
      out_tail = StridedTail{stride, phase, AffineTail{rat_abs(lane.a) * lane.stride, v0}};
      break;
    }
  }

  for (long long n = 0; n < ext; ++n) append_pair(prefix, x.eval(n));
  return TildeImage{RealSeqRep(std::move(prefix), std::move(out_tail))};
}

DiagOpSeq psi(const RealSeqRep& alpha) { return DiagOpSeq(EigenForm::ExpHalf, tilde(alpha).seq); }

// ---------------------------------------------------------------------------

namespace {

// Negate a sequence within the representation class; geometric tails (whose
// coefficients must stay positive) have no negation.
std::optional<RealSeqRep> negated(const RealSeqRep& s) {
  std::vector<Rational> prefix = s.prefix();
  for (auto& v : prefix) v = -v;
  RealTail tail = s.tail();
  bool ok = true;
  std::visit(
      [&](auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, ConstTail>) {
          t.value = -t.value;
        } else if constexpr (std::is_same_v<T, PeriodicTail>) {
          for (auto& v : t.cycle) v = -v;
        } else if constexpr (std::is_same_v<T, AffineTail>) {
          t.slope = -t.slope;
          t.intercept = -t.intercept;
        } else if constexpr (std::is_same_v<T, GeometricTail>) {
          ok = false;
        } else {
          if (auto* ia = std::get_if<AffineTail>(&t.inner)) {
            ia->slope = -ia->slope;
            ia->intercept = -ia->intercept;
          } else {
            ok = false;
          }
        }
      },
      tail);
  if (!ok) return std::nullopt;
  return RealSeqRep(std::move(prefix), std::move(tail));
}

}  // namespace

PhiImage phi(const DiagOpSeq& A) {
  PhiImage img;
  img.op = A;
  switch (A.form()) {
    case EigenForm::ExpHalf:
      // phi = -2 ln e^(x/2) = -x
      img.exact = negated(A.seq());
      break;
    case EigenForm::Plain:
      if (pointwise_equal(A.seq(), RealSeqRep::zero())) img.exact = RealSeqRep::zero();
      break;
    case EigenForm::WeightSeq:
      if (pointwise_equal(A.seq(), RealSeqRep::constant(1))) img.exact = RealSeqRep::zero();
      break;
  }
  return img;
}

namespace {

enum class PhiClass {
  LogBounded,     // weights bounded above and below
  LogOfLinear,    // phi ~ -2 ln(slope * n)
  LogLinear,      // phi ~ -rate * n (rate > 0)
  LogGeom,        // phi = -(coeff * ratio^n)
  OscLogOfLinear, // lane phi ~ -2 ln(slope * n), zero off lane
  OscLogLinear,   // lane phi linear, zero off lane
  OscLogGeom
};

struct PhiShape {
  PhiClass cls = PhiClass::LogBounded;
  // LogLinear / OscLogLinear rate: either -2 ln(rational ratio) or an exact
  // rational slope (from exponential-form operators)
  bool rate_is_log_of = false;
  Rational rate;  // ratio (rate_is_log_of) or exact slope per step
  Rational geo_coeff, geo_ratio;
  bool has_lane = false;
  std::uint32_t stride = 0, residue = 0;
};

PhiShape classify_phi(const DiagOpSeq& A) {
  PhiShape p;
  const RealSeqRep& s = A.seq();
  const bool expform = A.form() == EigenForm::ExpHalf;
  switch (s.tail_class()) {
    case TailClass::Const:
    case TailClass::Periodic:
      p.cls = PhiClass::LogBounded;
      break;
    case TailClass::Affine:
      if (expform) {
        p.cls = PhiClass::LogLinear;
        p.rate_is_log_of = false;
        p.rate = s.abs_affine().slope;
      } else {
        p.cls = PhiClass::LogOfLinear;
      }
      break;
    case TailClass::Geometric:
      if (expform) {
        auto g = s.abs_geometric();
        p.cls = PhiClass::LogGeom;
        p.geo_coeff = g.coeff;
        p.geo_ratio = g.ratio;
      } else {
        p.cls = PhiClass::LogLinear;
        p.rate_is_log_of = true;
        p.rate = s.abs_geometric().ratio;
      }
      break;
    case TailClass::Strided: {
      auto lane = s.lane();
      p.has_lane = true;
      p.stride = lane.stride;
      p.residue = lane.residue;
      if (lane.inner_affine) {
        if (expform) {
          p.cls = PhiClass::OscLogLinear;
          p.rate_is_log_of = false;
          p.rate = lane.a * lane.stride;  // drop per lane step
        } else {
          p.cls = PhiClass::OscLogOfLinear;
        }
      } else {
        if (expform) {
          p.cls = PhiClass::OscLogGeom;
        } else {
          p.cls = PhiClass::OscLogLinear;
          p.rate_is_log_of = true;
          p.rate = lane.geo_step;
        }
      }
      break;
    }
  }
  return p;
}

bool phi_rates_equal(const PhiShape& a, const PhiShape& b) {
  // 2 ln r (r rational > 1) never equals a rational slope
  if (a.rate_is_log_of != b.rate_is_log_of) return false;
  return a.rate == b.rate;
}

long long phi_divergence_witness(const PhiImage& a, const PhiImage& b, double threshold) {
  const long long maxlen = std::max(a.op.seq().prefix_len(), b.op.seq().prefix_len());
  const long long width =
      2 * big_lcm(BigInt(a.op.seq().period()), BigInt(b.op.seq().period())).convert_to<long long>() + 2;
  for (long long base = maxlen + 1;; base = base * 2 + 1) {
    for (long long n = base; n < base + width; ++n)
      if (std::fabs(a.eval_double(n) - b.eval_double(n)) > threshold) return n;
    if (base > (1ll << 60)) throw InternalInvariantFailure("phi divergence witness not found");
  }
}

}  // namespace

LinfVerdict decide_linf_phi(const PhiImage& a, const PhiImage& b) {
  if (a.exact && b.exact) return decide_linf(*a.exact, *b.exact);

  LinfVerdict v;
  const DiagOpSeq& A = a.op;
  const DiagOpSeq& B = b.op;

  // two exponential-form operators compare exactly through their arguments
  if (A.form() == EigenForm::ExpHalf && B.form() == EigenForm::ExpHalf) {
    DiffBounds d = diff_bounds(B.seq(), A.seq());  // phi_a - phi_b = x_b - x_a
    if (d.bounded) {
      v.equivalent = true;
      v.bound = std::max(rat_abs(d.sup), rat_abs(d.inf));
      v.box = equality_box(A.seq(), B.seq());
      return v;
    }
    v.equivalent = false;
    v.witness = phi_divergence_witness(a, b, 28.0);
    v.schedule = "weight-log difference exceeds 28, so the squared weight ratio leaves [1e-6, 1e6]";
    return v;
  }

  PhiShape pa = classify_phi(A), pb = classify_phi(B);
  bool same = pa.cls == pb.cls;
  if (same && pa.has_lane) same = pa.stride == pb.stride && pa.residue == pb.residue;
  if (same && (pa.cls == PhiClass::LogLinear || pa.cls == PhiClass::OscLogLinear)) same = phi_rates_equal(pa, pb);
  if (same && pa.cls == PhiClass::LogGeom) same = pa.geo_coeff == pb.geo_coeff && pa.geo_ratio == pb.geo_ratio;
  if (same && pa.cls == PhiClass::OscLogGeom) same = diff_bounds(A.seq(), B.seq()).bounded;

  if (!same) {
    v.equivalent = false;
    v.witness = phi_divergence_witness(a, b, 28.0);
    v.schedule = "weight-log growth classes differ; difference exceeds 28 at the witness";
    return v;
  }

  // Equivalent: bound = sup |phi_a - phi_b| = 2 sup |ln(w_b/w_a)|. Beyond a
  // class-specific stabilization index the weight ratio moves monotonically
  // toward its limit, so the candidates are a finite box plus that limit.
  const long long maxlen = std::max(A.seq().prefix_len(), B.seq().prefix_len());
  const long long L = big_lcm(BigInt(A.seq().period()), BigInt(B.seq().period())).convert_to<long long>();

  auto phi_precise = [](const DiagOpSeq& X, long long n) -> BigFloat {
    if (X.form() == EigenForm::ExpHalf) return -to_bigfloat(X.seq().eval(n));
    return -2 * log(to_bigfloat(X.weight_rational(n)));
  };
  auto affine_pos_stab = [](const DiagOpSeq& X) -> long long {
    auto f = X.seq().abs_affine();
    if (X.form() == EigenForm::WeightSeq) return X.seq().tail_start();
    Rational root = -f.intercept / f.slope;
    return rat_floor(root).convert_to<long long>() + 2;
  };

  long long n1 = maxlen + L;  // LogBounded: one joint cycle covers everything
  BigFloat limit(0);
  switch (pa.cls) {
    case PhiClass::LogBounded:
      break;
    case PhiClass::LogOfLinear: {
      n1 = std::max({maxlen, affine_pos_stab(A), affine_pos_stab(B)});
      Rational slope_ratio = rat_abs(B.seq().abs_affine().slope) / rat_abs(A.seq().abs_affine().slope);
      limit = abs(2 * log(to_bigfloat(slope_ratio)));
      break;
    }
    case PhiClass::LogLinear: {
      n1 = maxlen + 1;
      Rational coeff_ratio = B.seq().abs_geometric().coeff / A.seq().abs_geometric().coeff;
      limit = abs(2 * log(to_bigfloat(coeff_ratio)));
      break;
    }
    case PhiClass::OscLogOfLinear: {
      auto la = A.seq().lane(), lb = B.seq().lane();
      auto lane_stab = [](const RealSeqRep::Lane& l) {
        Rational root = -l.b / l.a;
        return rat_floor(root).convert_to<long long>() + 1 + l.stride;
      };
      n1 = std::max({la.anchor, lb.anchor, lane_stab(la), lane_stab(lb)});
      limit = abs(2 * log(to_bigfloat(rat_abs(lb.a) / rat_abs(la.a))));
      break;
    }
    case PhiClass::OscLogLinear: {
      auto la = A.seq().lane(), lb = B.seq().lane();
      n1 = std::max(la.anchor, lb.anchor);
      auto lane_value = [](const RealSeqRep::Lane& l, long long n) {
        return l.geo_value_at_anchor * rat_pow(l.geo_step, (n - l.anchor) / l.stride);
      };
      limit = abs(2 * log(to_bigfloat(lane_value(lb, n1) / lane_value(la, n1))));
      break;
    }
    default:
      throw InternalInvariantFailure("unexpected class in phi bound computation");
  }

  BigFloat worst = limit;
  for (long long n = 0; n <= n1; ++n) worst = std::max(worst, BigFloat(abs(phi_precise(a.op, n) - phi_precise(b.op, n))));
  v.equivalent = true;
  v.bound = round_up(worst);
  v.box = n1;
  v.schedule = "bound outward-rounded from weight-log extrema and the tail ratio limit";
  return v;
}

// ---------------------------------------------------------------------------

SpectrumRep psi_k(const DimSeqRep& alpha) {
  if (!diverges(alpha)) throw NotInX0("total dimension must diverge");
  std::vector<SpectrumBlock> blocks;
  for (long long n = 0; n < alpha.prefix_len(); ++n) {
    BigInt w = BigInt(1) << static_cast<unsigned>(n);
    blocks.push_back({Rational(w - 1), alpha.eval(n)});
  }
  return SpectrumRep(std::move(blocks), alpha.prefix_len(), alpha.tail());
}

// ---------------------------------------------------------------------------
// Sampling harness.

namespace {

using Rng = std::mt19937_64;

long long pick(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

Rational small_rat(Rng& rng, long long mag = 6, long long den = 3) {
  return Rational(pick(rng, -mag, mag), pick(rng, 1, den));
}

Rational pos_rat(Rng& rng, long long mag = 5, long long den = 2) {
  return Rational(pick(rng, 1, mag), pick(rng, 1, den));
}

RealTail sample_tail(Rng& rng) {
  switch (pick(rng, 0, 4)) {
    case 0: return ConstTail{small_rat(rng)};
    case 1: {
      std::vector<Rational> cyc(static_cast<std::size_t>(pick(rng, 1, 4)));
      for (auto& v : cyc) v = small_rat(rng);
      return PeriodicTail{cyc};
    }
    case 2: {
      Rational s = small_rat(rng, 3, 2);
      if (s == 0) s = 1;
      return AffineTail{s, small_rat(rng)};
    }
    case 3: return GeometricTail{pos_rat(rng), Rational(1) + pos_rat(rng, 3, 1)};
    default: {
      std::uint32_t q = static_cast<std::uint32_t>(pick(rng, 2, 3));
      std::uint32_t ph = static_cast<std::uint32_t>(pick(rng, 0, q - 1));
      if (pick(rng, 0, 1) == 0) {
        Rational s = small_rat(rng, 3, 2);
        if (s == 0) s = 1;
        return StridedTail{q, ph, AffineTail{s, small_rat(rng)}};
      }
      return StridedTail{q, ph, GeometricTail{pos_rat(rng, 3, 1), Rational(1) + pos_rat(rng, 3, 1)}};
    }
  }
}

RealSeqRep sample_seq(Rng& rng) {
  std::vector<Rational> prefix(static_cast<std::size_t>(pick(rng, 0, 4)));
  for (auto& v : prefix) v = small_rat(rng);
  return RealSeqRep(std::move(prefix), sample_tail(rng));
}

RealSeqRep related_seq(Rng& rng, const RealSeqRep& s) {
  auto prefix = s.prefix();
  TailClass k = s.tail_class();
  bool may_grow = k == TailClass::Const || k == TailClass::Periodic || k == TailClass::Affine;
  long long grow = may_grow ? pick(rng, 0, 3) : 0;
  for (long long i = 0; i < grow; ++i) prefix.push_back(s.eval(s.prefix_len() + i));
  for (auto& v : prefix) v += small_rat(rng, 4, 2);
  RealTail tail = s.tail();
  if (pick(rng, 0, 1) == 0) {
    Rational c = small_rat(rng, 4, 2);
    if (auto* ct = std::get_if<ConstTail>(&tail)) ct->value += c;
    else if (auto* pt = std::get_if<PeriodicTail>(&tail))
      for (auto& v : pt->cycle) v += c;
    else if (auto* at = std::get_if<AffineTail>(&tail))
      at->intercept += c;
  }
  return RealSeqRep(std::move(prefix), std::move(tail));
}

DiagOpSeq sample_operator(Rng& rng) {
  switch (pick(rng, 0, 2)) {
    case 0: return DiagOpSeq(EigenForm::Plain, sample_seq(rng));
    case 1: {
      // weight sequences: entries >= 1
      std::vector<Rational> prefix(static_cast<std::size_t>(pick(rng, 0, 3)));
      for (auto& v : prefix) v = 1 + pos_rat(rng, 4, 2);
      RealTail tail;
      switch (pick(rng, 0, 3)) {
        case 0: tail = ConstTail{1 + pos_rat(rng)}; break;
        case 1: {
          std::vector<Rational> cyc(static_cast<std::size_t>(pick(rng, 1, 3)));
          for (auto& v : cyc) v = 1 + pos_rat(rng);
          tail = PeriodicTail{cyc};
          break;
        }
        case 2: tail = AffineTail{pos_rat(rng, 3, 2), 1 + pos_rat(rng)}; break;
        default: tail = GeometricTail{1 + pos_rat(rng, 3, 2), Rational(1) + pos_rat(rng, 3, 1)}; break;
      }
      return DiagOpSeq(EigenForm::WeightSeq, RealSeqRep(std::move(prefix), std::move(tail)));
    }
    default: {
      // exponential form: nonnegative argument
      std::vector<Rational> prefix(static_cast<std::size_t>(pick(rng, 0, 3)));
      for (auto& v : prefix) v = pick(rng, 0, 4) == 0 ? Rational(0) : pos_rat(rng, 5, 2);
      RealTail tail;
      switch (pick(rng, 0, 3)) {
        case 0: tail = ConstTail{pick(rng, 0, 3) == 0 ? Rational(0) : pos_rat(rng)}; break;
        case 1: {
          std::vector<Rational> cyc(static_cast<std::size_t>(pick(rng, 1, 3)));
          for (auto& v : cyc) v = pos_rat(rng);
          tail = PeriodicTail{cyc};
          break;
        }
        case 2: tail = AffineTail{pos_rat(rng, 3, 2), pos_rat(rng)}; break;
        default: tail = GeometricTail{pos_rat(rng, 3, 1), Rational(1) + pos_rat(rng, 2, 1)}; break;
      }
      return DiagOpSeq(EigenForm::ExpHalf, RealSeqRep(std::move(prefix), std::move(tail)));
    }
  }
}

DiagOpSeq related_operator(Rng& rng, const DiagOpSeq& A) {
  auto prefix = A.seq().prefix();
  for (auto& v : prefix) {
    Rational d = small_rat(rng, 3, 2);
    switch (A.form()) {
      case EigenForm::Plain: v += d; break;
      case EigenForm::WeightSeq: v = std::max(Rational(1), Rational(v + d)); break;
      case EigenForm::ExpHalf: v = std::max(Rational(0), Rational(v + d)); break;
    }
  }
  return DiagOpSeq(A.form(), RealSeqRep(std::move(prefix), A.seq().tail()), A.index_scheme());
}

}  // namespace

BireductionReport verify_bireduction(std::uint64_t seed, long long trials) {
  BireductionReport rep;
  rep.seed = seed;
  rep.trials = trials;
  Rng rng(seed);
  for (long long t = 0; t < trials; ++t) {
    // chain 1: sequences through the exponential embedding
    RealSeqRep alpha = sample_seq(rng);
    RealSeqRep beta;
    switch (t % 3) {
      case 0: beta = related_seq(rng, alpha); break;
      case 1: beta = sample_seq(rng); break;
      default: beta = alpha; break;
    }
    const bool linf_eq = decide_linf(alpha, beta).equivalent;
    const bool edom_eq = decide_edom(psi(alpha), psi(beta)).equal;
    if (linf_eq == edom_eq) {
      ++rep.psi_agreements;
    } else {
      rep.discrepancies.push_back(
          {"psi", t, std::string("decide_linf says ") + (linf_eq ? "equivalent" : "inequivalent") +
                         " but the embedded operators compare " + (edom_eq ? "equal" : "unequal")});
    }

    // chain 2: operators through the weight-log map
    DiagOpSeq A = sample_operator(rng);
    DiagOpSeq B;
    switch (t % 3) {
      case 0: B = related_operator(rng, A); break;
      case 1: B = sample_operator(rng); break;
      default: B = A; break;
    }
    const bool dom_eq = decide_edom(A, B).equal;
    const bool phi_eq = decide_linf_phi(phi(A), phi(B)).equivalent;
    if (dom_eq == phi_eq) {
      ++rep.phi_agreements;
    } else {
      rep.discrepancies.push_back(
          {"phi", t, std::string("decide_edom says ") + (dom_eq ? "equal" : "unequal") +
                         " but the weight-log images compare " + (phi_eq ? "equivalent" : "inequivalent")});
    }
  }
  return rep;
}

}  // namespace dg
