#include "domaingauge/operators.hpp"

#include <algorithm>
#include <cmath>

#include "domaingauge/approx.hpp"
#include "domaingauge/errors.hpp"

namespace dg {

namespace {

void validate_weight_seq(const RealSeqRep& w) {
  if (w.tail_class() == TailClass::Strided)
    throw ParseError("weight sequences cannot be strided (weights must stay >= 1)");
  for (const auto& v : w.prefix())
    if (v < 1) throw ParseError("weight sequence entries must be >= 1");
  switch (w.tail_class()) {
    case TailClass::Const:
      if (std::get<ConstTail>(w.tail()).value < 1) throw ParseError("weight tail below 1");
      break;
    case TailClass::Periodic:
      for (const auto& v : std::get<PeriodicTail>(w.tail()).cycle)
        if (v < 1) throw ParseError("weight tail below 1");
      break;
    case TailClass::Affine: {
      const auto& t = std::get<AffineTail>(w.tail());
      if (t.slope < 0 || t.intercept < 1) throw ParseError("affine weight tail must grow from >= 1");
      break;
    }
    case TailClass::Geometric:
      if (std::get<GeometricTail>(w.tail()).coeff < 1) throw ParseError("geometric weight tail must start >= 1");
      break;
    case TailClass::Strided:
      break;
  }
}

}  // namespace

DiagOpSeq::DiagOpSeq(EigenForm form, RealSeqRep seq, std::string index_scheme)
    : form_(form), seq_(std::move(seq)), scheme_(std::move(index_scheme)) {
  if (form_ == EigenForm::WeightSeq) validate_weight_seq(seq_);
  if (form_ == EigenForm::ExpHalf && !is_nonnegative(seq_))
    throw ParseError("exponential eigenvalue form requires a nonnegative argument sequence");
}

Rational DiagOpSeq::eigen_rational(long long n) const {
  switch (form_) {
    case EigenForm::Plain: return seq_.eval(n);
    case EigenForm::WeightSeq: return seq_.eval(n) - 1;
    case EigenForm::ExpHalf: break;
  }
  throw InternalInvariantFailure("eigen_rational on an exponential-form operator");
}

double DiagOpSeq::eigen_double(long long n) const {
  switch (form_) {
    case EigenForm::Plain: return seq_.eval_double(n);
    case EigenForm::WeightSeq: return seq_.eval_double(n) - 1.0;
    case EigenForm::ExpHalf: return std::expm1(seq_.eval_double(n) / 2.0);
  }
  return 0.0;
}

Rational DiagOpSeq::weight_rational(long long n) const {
  switch (form_) {
    case EigenForm::Plain: return rat_abs(seq_.eval(n)) + 1;
    case EigenForm::WeightSeq: return seq_.eval(n);
    case EigenForm::ExpHalf: break;
  }
  throw InternalInvariantFailure("weight_rational on an exponential-form operator");
}

double DiagOpSeq::log_weight(long long n) const {
  if (form_ == EigenForm::ExpHalf) return seq_.eval_double(n) / 2.0;
  if (n < seq_.prefix_len() || seq_.tail_class() == TailClass::Const || seq_.tail_class() == TailClass::Periodic)
    return std::log(to_double(weight_rational(n)));
  // growing tails: work from the descriptors to avoid exact blowup
  if (seq_.tail_class() == TailClass::Geometric) {
    auto g = seq_.abs_geometric();
    double t = std::log(to_double(g.coeff)) + static_cast<double>(n) * std::log(to_double(g.ratio));
    if (form_ == EigenForm::WeightSeq) return t;  // w = C r^n exactly
    // w = |v| + 1 with v = C r^n > 0
    return t > 40 ? t : std::log1p(std::exp(t));
  }
  double v = seq_.eval_double(n);
  if (form_ == EigenForm::WeightSeq) return std::log(v);
  return std::log1p(std::fabs(v));
}

// ---------------------------------------------------------------------------
// Domain comparison.

namespace {

enum class GrowthKind { Bounded, Linear, Exponential, DoubleExp, OscLinear, OscExp, OscDoubleExp };

struct RatioRate {
  bool exp_of = false;  // rate = e^(value/2) when set, else the rational value itself
  Rational value;
  bool operator==(const RatioRate& o) const {
    if (exp_of != o.exp_of) return false;  // e^(s/2) is never rational for s != 0
    return value == o.value;
  }
};

struct WGrowth {
  GrowthKind kind = GrowthKind::Bounded;
  RatioRate rate;                  // Exponential / OscExp
  Rational dexp_coeff, dexp_ratio; // DoubleExp (absolute form of the argument tail)
  bool has_lane = false;
  std::uint32_t stride = 0, residue = 0;
};

WGrowth classify_weight(const DiagOpSeq& A) {
  WGrowth g;
  const RealSeqRep& s = A.seq();
  const TailClass k = s.tail_class();
  switch (A.form()) {
    case EigenForm::Plain:
    case EigenForm::WeightSeq:
      switch (k) {
        case TailClass::Const:
        case TailClass::Periodic: g.kind = GrowthKind::Bounded; break;
        case TailClass::Affine: g.kind = GrowthKind::Linear; break;
        case TailClass::Geometric:
          g.kind = GrowthKind::Exponential;
          g.rate = {false, s.abs_geometric().ratio};
          break;
        case TailClass::Strided: {
          auto lane = s.lane();
          g.has_lane = true;
          g.stride = lane.stride;
          g.residue = lane.residue;
          if (lane.inner_affine) {
            g.kind = GrowthKind::OscLinear;
          } else {
            g.kind = GrowthKind::OscExp;
            g.rate = {false, lane.geo_step};
          }
          break;
        }
      }
      break;
    case EigenForm::ExpHalf:
      switch (k) {
        case TailClass::Const:
        case TailClass::Periodic: g.kind = GrowthKind::Bounded; break;
        case TailClass::Affine:
          g.kind = GrowthKind::Exponential;
          g.rate = {true, s.abs_affine().slope};
          break;
        case TailClass::Geometric: {
          auto geo = s.abs_geometric();
          g.kind = GrowthKind::DoubleExp;
          g.dexp_coeff = geo.coeff;
          g.dexp_ratio = geo.ratio;
          break;
        }
        case TailClass::Strided: {
          auto lane = s.lane();
          g.has_lane = true;
          g.stride = lane.stride;
          g.residue = lane.residue;
          if (lane.inner_affine) {
            g.kind = GrowthKind::OscExp;
            g.rate = {true, lane.a * lane.stride};  // argument grows by slope*stride per lane step
          } else {
            g.kind = GrowthKind::OscDoubleExp;
          }
          break;
        }
      }
      break;
  }
  return g;
}

struct RatioExtrema {
  Rational sup, inf;
  long long box;
};

// Exact extrema of w_B(n) / w_A(n) for rational-weight pairs of matching
// growth kind. Candidates are a finite box plus the tail limit; beyond the
// box the ratio moves monotonically toward the included limit.
RatioExtrema rational_ratio_extrema(const DiagOpSeq& A, const DiagOpSeq& B, const WGrowth& ga, const WGrowth& gb) {
  const long long maxlen = std::max(A.seq().prefix_len(), B.seq().prefix_len());
  std::vector<Rational> extra;
  long long hi = maxlen;

  auto affine_weight_limit_slope = [](const DiagOpSeq& X) {
    auto f = X.seq().abs_affine();
    return rat_abs(f.slope);
  };
  auto affine_sign_stab = [](const DiagOpSeq& X) -> long long {
    auto f = X.seq().abs_affine();
    if (X.form() == EigenForm::WeightSeq) return X.seq().tail_start();
    Rational root = -f.intercept / f.slope;
    return std::max(X.seq().tail_start(), rat_floor(root).convert_to<long long>() + 2);
  };

  switch (ga.kind) {
    case GrowthKind::Bounded: {
      const long long L = big_lcm(BigInt(A.seq().period()), BigInt(B.seq().period())).convert_to<long long>();
      hi = maxlen + L - 1;
      break;
    }
    case GrowthKind::Linear: {
      hi = std::max(affine_sign_stab(A), affine_sign_stab(B));
      extra.push_back(affine_weight_limit_slope(B) / affine_weight_limit_slope(A));
      break;
    }
    case GrowthKind::Exponential: {
      // w = coeff * r^n (+1 for plain forms); the ratio is monotone in r^n
      auto coeff_of = [](const DiagOpSeq& X) { return X.seq().abs_geometric().coeff; };
      extra.push_back(coeff_of(B) / coeff_of(A));
      hi = maxlen;
      break;
    }
    case GrowthKind::OscLinear: {
      auto la = A.seq().lane(), lb = B.seq().lane();
      long long stab = std::max(la.anchor, lb.anchor);
      auto lane_stab = [&](const RealSeqRep::Lane& l) -> long long {
        if (l.a == 0) return l.anchor;
        Rational root = -l.b / l.a;
        return rat_floor(root).convert_to<long long>() + 1 + l.stride;
      };
      hi = std::max({stab, lane_stab(la), lane_stab(lb)});
      extra.push_back(rat_abs(lb.a) / rat_abs(la.a));
      extra.push_back(Rational(1));  // off-lane weights are 1 on both sides
      break;
    }
    case GrowthKind::OscExp: {
      auto la = A.seq().lane(), lb = B.seq().lane();
      hi = std::max(la.anchor, lb.anchor);
      // ratio limit along the lane: evaluate both lane laws at one aligned point
      auto lane_value = [](const RealSeqRep::Lane& l, long long n) {
        return l.geo_value_at_anchor * rat_pow(l.geo_step, (n - l.anchor) / l.stride);
      };
      extra.push_back(lane_value(lb, hi) / lane_value(la, hi));
      extra.push_back(Rational(1));
      break;
    }
    default:
      throw InternalInvariantFailure("rational ratio extrema on a non-rational growth kind");
  }

  RatioExtrema r;
  r.box = hi;
  bool first = true;
  auto feed = [&](const Rational& v) {
    if (first) {
      r.sup = r.inf = v;
      first = false;
    } else {
      r.sup = std::max(r.sup, v);
      r.inf = std::min(r.inf, v);
    }
  };
  for (long long n = 0; n <= hi; ++n) feed(B.weight_rational(n) / A.weight_rational(n));
  for (const auto& v : extra) feed(v);
  return r;
}

// Index where |ln w_B - ln w_A| > 7.5, i.e. the squared weight ratio leaves
// [1e-6, 1e6] with a factor ~3 to spare; double precision cannot blur that.
long long log_weight_divergence_witness(const DiagOpSeq& A, const DiagOpSeq& B) {
  const long long maxlen = std::max(A.seq().prefix_len(), B.seq().prefix_len());
  const long long width =
      2 * big_lcm(BigInt(A.seq().period()), BigInt(B.seq().period())).convert_to<long long>() + 2;
  for (long long base = maxlen + 1;; base = base * 2 + 1) {
    for (long long n = base; n < base + width; ++n) {
      if (std::fabs(B.log_weight(n) - A.log_weight(n)) > 7.5) return n;
    }
    if (base > (1ll << 60)) throw InternalInvariantFailure("log-weight divergence witness not found");
  }
}

BigFloat log_weight_precise(const DiagOpSeq& X, long long n) {
  if (X.form() == EigenForm::ExpHalf) return to_bigfloat(X.seq().eval(n)) / 2;
  return log(to_bigfloat(X.weight_rational(n)));
}

}  // namespace

DomVerdict decide_edom(const DiagOpSeq& A, const DiagOpSeq& B) {
  if (A.index_scheme() != B.index_scheme())
    throw IndexSchemeMismatch("domain comparison is basis-relative: '" + A.index_scheme() + "' vs '" +
                              B.index_scheme() + "'");
  DomVerdict v;

  // Both exponential: the weight ratio is e^((x_b - x_a)/2) exactly.
  if (A.form() == EigenForm::ExpHalf && B.form() == EigenForm::ExpHalf) {
    DiffBounds d = diff_bounds(B.seq(), A.seq());
    if (d.bounded) {
      v.equal = true;
      v.c2 = exp_upper(d.sup);
      v.c1 = exp_lower(d.inf);
      v.bounds_exact = false;
      v.box = equality_box(A.seq(), B.seq());
      return v;
    }
    v.equal = false;
    // |x_b - x_a| > 28 > 2 ln(10^6) makes the squared weight ratio leave [1e-6, 1e6]
    v.witness = linf_divergence_witness(A.seq(), B.seq(), Rational(28));
    v.note = "exponential arguments drift apart unboundedly";
    return v;
  }

  const WGrowth ga = classify_weight(A);
  const WGrowth gb = classify_weight(B);
  const bool rational_pair = A.form() != EigenForm::ExpHalf && B.form() != EigenForm::ExpHalf;

  bool same_class = ga.kind == gb.kind;
  if (same_class && ga.has_lane) same_class = ga.stride == gb.stride && ga.residue == gb.residue;
  if (same_class && (ga.kind == GrowthKind::Exponential || ga.kind == GrowthKind::OscExp))
    same_class = ga.rate == gb.rate;
  if (same_class && ga.kind == GrowthKind::DoubleExp)
    same_class = ga.dexp_coeff == gb.dexp_coeff && ga.dexp_ratio == gb.dexp_ratio;
  if (same_class && ga.kind == GrowthKind::OscDoubleExp)
    same_class = diff_bounds(A.seq(), B.seq()).bounded;

  if (!same_class) {
    v.equal = false;
    v.witness = log_weight_divergence_witness(A, B);
    v.note = "weight growth classes differ";
    return v;
  }

  if (rational_pair) {
    RatioExtrema e = rational_ratio_extrema(A, B, ga, gb);
    v.equal = true;
    v.c2 = e.sup * e.sup;
    v.c1 = e.inf * e.inf;
    v.bounds_exact = true;
    v.box = e.box;
    return v;
  }

  // Mixed exponential/rational pair of matching class: only bounded weights
  // can match (an exponential rate never equals a rational one).
  if (ga.kind != GrowthKind::Bounded)
    throw InternalInvariantFailure("mixed-form pair classified equal outside the bounded class");
  const long long L =
      big_lcm(BigInt(A.seq().period()), BigInt(B.seq().period())).convert_to<long long>();
  const long long hi = std::max(A.seq().prefix_len(), B.seq().prefix_len()) + L - 1;
  BigFloat sup(-1), inf(-1);
  for (long long n = 0; n <= hi; ++n) {
    BigFloat ratio = exp(log_weight_precise(B, n) - log_weight_precise(A, n));
    if (n == 0) {
      sup = inf = ratio;
    } else {
      sup = std::max(sup, ratio);
      inf = std::min(inf, ratio);
    }
  }
  v.equal = true;
  v.c2 = round_up(sup * sup);
  v.c1 = round_down(inf * inf);
  v.bounds_exact = false;
  v.box = hi;
  return v;
}

// ---------------------------------------------------------------------------
// Resolvent-weight transform.

namespace {

RealSeqRep scale_by_positive(const RealSeqRep& s, const Rational& f) {
  std::vector<Rational> prefix = s.prefix();
  for (auto& v : prefix) v *= f;
  RealTail tail = s.tail();
  std::visit(
      [&](auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, ConstTail>) {
          t.value *= f;
        } else if constexpr (std::is_same_v<T, PeriodicTail>) {
          for (auto& v : t.cycle) v *= f;
        } else if constexpr (std::is_same_v<T, AffineTail>) {
          t.slope *= f;
          t.intercept *= f;
        } else if constexpr (std::is_same_v<T, GeometricTail>) {
          t.coeff *= f;
        } else {
          if (auto* ia = std::get_if<AffineTail>(&t.inner)) {
            ia->slope *= f;
            ia->intercept *= f;
          } else {
            std::get<GeometricTail>(t.inner).coeff *= f;
          }
        }
      },
      tail);
  return RealSeqRep(std::move(prefix), std::move(tail));
}

}  // namespace

Rational TransformedSeq::eval_rational(long long n) const {
  if (exact) return exact->eval(n);
  if (source.form() == EigenForm::ExpHalf)
    throw InternalInvariantFailure("eval_rational on an exponential transform");
  return rat_pow(source.weight_rational(n), -power);
}

double TransformedSeq::eval_double(long long n) const {
  return std::exp(-static_cast<double>(power) * source.log_weight(n));
}

TransformedSeq t_transform(const DiagOpSeq& A, int power) {
  if (power != 1 && power != 2) throw ParseError("supported resolvent-weight powers are 1 and 2");
  TransformedSeq out;
  out.power = power;
  out.source = A;

  if (A.form() == EigenForm::ExpHalf) {
    // w^(-p) = exp(-(p/2) x)
    out.exp_neg_arg = scale_by_positive(A.seq(), Rational(power, 2));
    return out;
  }

  const RealSeqRep& s = A.seq();
  auto weight_at = [&](long long n) { return A.weight_rational(n); };
  switch (s.tail_class()) {
    case TailClass::Const:
    case TailClass::Periodic: {
      std::vector<Rational> prefix;
      for (long long n = 0; n < s.prefix_len(); ++n) prefix.push_back(rat_pow(weight_at(n), -power));
      if (s.tail_class() == TailClass::Const) {
        out.exact = RealSeqRep(std::move(prefix),
                               ConstTail{rat_pow(weight_at(s.prefix_len()), -power)});
      } else {
        std::vector<Rational> cycle;
        for (long long i = 0; i < s.period(); ++i) cycle.push_back(rat_pow(weight_at(s.prefix_len() + i), -power));
        out.exact = RealSeqRep(std::move(prefix), PeriodicTail{std::move(cycle)});
      }
      return out;
    }
    case TailClass::Affine:
      out.asymptotic = "inverse power of an affine weight (pointwise evaluation stays exact)";
      return out;
    case TailClass::Geometric:
      out.asymptotic = "inverse power of a geometric weight (pointwise evaluation stays exact)";
      return out;
    case TailClass::Strided:
      out.asymptotic = "inverse power of a lane-growing weight (pointwise evaluation stays exact)";
      return out;
  }
  return out;
}

}  // namespace dg
