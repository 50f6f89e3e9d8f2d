#include <algorithm>
#include <map>

#include "domaingauge/approx.hpp"
#include "domaingauge/errors.hpp"
#include "domaingauge/operators.hpp"

// Associated dimension sequences. Band j collects the spectrum with weight
// |λ|+1 in [2^j, 2^(j+1)); bounded tails deposit infinitely many eigenvalues
// into finitely many bands, while geometric weights with a power-of-two
// ratio march through the bands in an eventually periodic single-hit
// pattern. Everything else leaves the representable class.

namespace dg {

long long spectral_band(const Rational& value) {
  Rational w = rat_abs(value) + 1;
  long long j = 0;
  BigInt pow = 2;  // 2^(j+1)
  while (w >= pow) {
    ++j;
    pow <<= 1;
  }
  return j;
}

namespace {

// floor(x / (2 ln 2)) for rational x >= 0; x/(2 ln 2) is never an integer
// unless x = 0, so a high-precision floor is certified.
long long exp_band(const Rational& x) {
  if (x == 0) return 0;
  BigFloat t = to_bigfloat(x) / (2 * log(BigFloat(2)));
  BigFloat fl = floor(t);
  if (t - fl < BigFloat("1e-50"))
    throw InternalInvariantFailure("exponential band landed on a dyadic boundary");
  return fl.convert_to<long long>();
}

struct BandAccumulator {
  std::map<long long, ExtNat> counts;

  void add(long long band, const ExtNat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = counts.emplace(band, c);
    if (!fresh) it->second += c;
  }

  /// Assemble with an optional single-hit pattern: one extra eigenvalue at
  /// every band >= pattern_start congruent to residue mod period.
  DimSeqRep assemble(std::optional<long long> pattern_start, long long period, long long residue) const {
    long long j0 = 0;
    if (!counts.empty()) j0 = counts.rbegin()->first + 1;
    if (pattern_start) j0 = std::max(j0, *pattern_start);
    std::vector<ExtNat> prefix(static_cast<std::size_t>(j0), ExtNat(0));
    for (const auto& [band, c] : counts) prefix[static_cast<std::size_t>(band)] += c;
    if (!pattern_start) return DimSeqRep(std::move(prefix), DimConstTail{ExtNat(0)});
    for (long long j = *pattern_start; j < j0; ++j)
      if ((j - residue) % period == 0) prefix[static_cast<std::size_t>(j)] += ExtNat(1);
    std::vector<ExtNat> cycle(static_cast<std::size_t>(period), ExtNat(0));
    for (long long i = 0; i < period; ++i)
      if (((j0 + i) - residue) % period == 0) cycle[static_cast<std::size_t>(i)] = ExtNat(1);
    return DimSeqRep(std::move(prefix), DimPeriodicTail{std::move(cycle)});
  }
};

// ratio = 2^s for integer s >= 1?
std::optional<long long> dyadic_log(const Rational& ratio) {
  if (den(ratio) != 1) return std::nullopt;
  BigInt n = num(ratio);
  if (n < 2) return std::nullopt;
  long long s = 0;
  while (n % 2 == 0) {
    n >>= 1;
    ++s;
  }
  if (n != 1) return std::nullopt;
  return s;
}

bool is_power_of_two(const Rational& q) {
  auto pow2 = [](BigInt v) {
    if (v < 1) return false;
    while (v % 2 == 0) v >>= 1;
    return v == 1;
  };
  return pow2(num(q)) && pow2(den(q));
}

// Bands of the weights w_j along an index progression, where
//   plain_shift = true:  w_j = v_j + 1 with v_{j+1} = r * v_j  (eigenvalues v)
//   plain_shift = false: w_{j+1} = r * w_j                      (weights directly)
// and r = 2^s. Deposits finitely many correction bands into `acc`, then
// returns the band where the locked single-hit pattern (step s) begins.
struct PatternInfo {
  long long start_band;
  long long period;
  long long residue;
};

PatternInfo geometric_band_walk(BandAccumulator& acc, Rational v0, long long s, bool plain_shift) {
  const Rational r = rat_pow(Rational(2), s);
  Rational v = v0;
  for (int guard = 0; guard < 4096; ++guard) {
    Rational w = plain_shift ? v + 1 : v;
    long long b = spectral_band(plain_shift ? v : v - 1);  // band of the eigenvalue
    // lock test: u = w / 2^b with all future downward drift still above 1
    Rational u = w / rat_pow(Rational(2), b);
    Rational drift = plain_shift ? (r - 1) / (rat_pow(Rational(2), b + s) * (1 - rat_pow(Rational(2), -s))) : Rational(0);
    if (u - drift > 1 || (!plain_shift && u >= 1)) {
      return {b, s, ((b % s) + s) % s};
    }
    acc.add(b, ExtNat(1));
    v *= r;
  }
  throw InternalInvariantFailure("geometric band walk failed to lock");
}

DimSeqRep dims_of_diag(const DiagOpSeq& A) {
  const RealSeqRep& s = A.seq();
  BandAccumulator acc;

  auto band_of_index = [&](long long n) -> long long {
    if (A.form() == EigenForm::ExpHalf) return exp_band(s.eval(n));
    return spectral_band(A.eigen_rational(n));
  };

  for (long long n = 0; n < s.prefix_len(); ++n) acc.add(band_of_index(n), ExtNat(1));

  switch (s.tail_class()) {
    case TailClass::Const:
      acc.add(band_of_index(s.tail_start()), ExtNat::infinity());
      return acc.assemble(std::nullopt, 0, 0);
    case TailClass::Periodic:
      for (long long i = 0; i < s.period(); ++i) acc.add(band_of_index(s.tail_start() + i), ExtNat::infinity());
      return acc.assemble(std::nullopt, 0, 0);
    case TailClass::Affine:
      throw UnsupportedTail("affine spectral growth spreads over bands with growing counts");
    case TailClass::Geometric: {
      if (A.form() == EigenForm::ExpHalf)
        throw UnsupportedTail("doubly exponential spectra have no periodic band pattern");
      auto geo = s.abs_geometric();
      auto sx = dyadic_log(geo.ratio);
      if (!sx) throw UnsupportedTail("geometric spectral growth needs a power-of-two ratio for periodic bands");
      const bool plain = A.form() == EigenForm::Plain;
      // first tail value (eigenvalue for plain operators, weight otherwise)
      Rational first = geo.coeff * rat_pow(geo.ratio, s.tail_start());
      if (is_power_of_two(first)) {
        // eigenvalues 2^m (plain) or weights 2^m: closed form, band = m except
        // that a plain eigenvalue 1 has weight 2 and sits in band 1
        long long m0 = 0;
        {
          Rational f = first;
          while (f > 1) {
            f /= 2;
            ++m0;
          }
          while (f < 1) {
            f *= 2;
            --m0;
          }
        }
        if (plain) {
          long long n = s.tail_start();
          long long m = m0;
          // small eigenvalues land in band 0 until v >= 1
          while (m < 1) {
            acc.add(m < 0 ? 0 : 1, ExtNat(1));
            m += *sx;
            ++n;
          }
          return acc.assemble(m, *sx, ((m % *sx) + *sx) % *sx);
        }
        if (m0 < 0) throw InternalInvariantFailure("weight below 1 escaped validation");
        return acc.assemble(m0, *sx, m0 % *sx);
      }
      PatternInfo p = geometric_band_walk(acc, plain ? first : first, *sx, plain);
      return acc.assemble(p.start_band, p.period, p.residue);
    }
    case TailClass::Strided: {
      if (A.form() != EigenForm::Plain)
        throw UnsupportedTail("lane-structured spectra are only band-resolvable for plain eigenvalues");
      auto lane = s.lane();
      if (lane.inner_affine)
        throw UnsupportedTail("affine spectral growth spreads over bands with growing counts");
      auto sx = dyadic_log(lane.geo_step);
      if (!sx) throw UnsupportedTail("geometric spectral growth needs a power-of-two ratio for periodic bands");
      acc.add(0, ExtNat::infinity());  // off-lane zeros all weigh 1
      PatternInfo p = geometric_band_walk(acc, lane.geo_value_at_anchor, *sx, true);
      return acc.assemble(p.start_band, p.period, p.residue);
    }
  }
  throw InternalInvariantFailure("unhandled tail class in assoc_dims");
}

}  // namespace

DimSeqRep assoc_dims(const DiagOpSeq& A) {
  DimSeqRep d = dims_of_diag(A);
  if (!diverges(d))
    throw InternalInvariantFailure("associated dimensions of a total operator must diverge");
  return d;
}

SigmaVerdict decide_edomu(const DiagOpSeq& A, const DiagOpSeq& B) {
  return decide_esigma(assoc_dims(A), assoc_dims(B));
}

// ---------------------------------------------------------------------------
// Spectrum blocks.

SpectrumRep::SpectrumRep(std::vector<SpectrumBlock> blocks, long long rule_start, DimTail rule_mult)
    : rule_start_(rule_start), rule_mult_(DimSeqRep({}, std::move(rule_mult)).tail()) {
  if (rule_start_ < 0) throw ParseError("rule start must be nonnegative");
  // merge duplicate values, drop zero multiplicities
  for (auto& b : blocks) {
    if (b.mult.is_zero()) continue;
    auto it = std::find_if(blocks_.begin(), blocks_.end(), [&](const SpectrumBlock& x) { return x.value == b.value; });
    if (it == blocks_.end())
      blocks_.push_back(b);
    else
      it->mult += b.mult;
  }
  ExtNat total(0);
  for (const auto& b : blocks_) total += b.mult;
  if (has_rule()) total = ExtNat::infinity();  // any nonzero pattern repeats forever
  if (!total.is_inf())
    throw ParseError("spectrum must carry infinite total multiplicity");
}

bool SpectrumRep::has_rule() const {
  if (const auto* c = std::get_if<DimConstTail>(&rule_mult_)) return !c->value.is_zero();
  return true;  // periodic patterns are nonzero after normalization
}

ExtNat SpectrumRep::rule_mult_at(long long n) const {
  if (n < rule_start_) return ExtNat(0);
  const long long i = n - rule_start_;
  if (const auto* c = std::get_if<DimConstTail>(&rule_mult_)) return c->value;
  const auto& cyc = std::get<DimPeriodicTail>(rule_mult_).cycle;
  return cyc[static_cast<std::size_t>(i % static_cast<long long>(cyc.size()))];
}

DimSeqRep assoc_dims(const SpectrumRep& S) {
  // rule block n carries value 2^n - 1, whose weight is exactly 2^n: band n
  BandAccumulator acc;
  long long max_explicit = -1;
  for (const auto& b : S.blocks()) {
    long long band = spectral_band(b.value);
    acc.add(band, b.mult);
    max_explicit = std::max(max_explicit, band);
  }
  long long j0 = std::max(S.rule_start(), max_explicit + 1);
  std::vector<ExtNat> prefix(static_cast<std::size_t>(j0), ExtNat(0));
  for (const auto& [band, c] : acc.counts) prefix[static_cast<std::size_t>(band)] += c;
  for (long long j = S.rule_start(); j < j0; ++j) prefix[static_cast<std::size_t>(j)] += S.rule_mult_at(j);
  // tail: the rule pattern rotated to start at band j0
  DimTail tail = S.rule_mult();
  if (auto* per = std::get_if<DimPeriodicTail>(&tail)) {
    const long long p = static_cast<long long>(per->cycle.size());
    const long long rot = (j0 - S.rule_start()) % p;
    std::rotate(per->cycle.begin(), per->cycle.begin() + rot, per->cycle.end());
  }
  return DimSeqRep(std::move(prefix), std::move(tail));
}

DiagOpSeq enumerate_spectrum(const SpectrumRep& S) {
  std::vector<Rational> prefix_values;
  std::vector<Rational> inf_values;
  for (const auto& b : S.blocks()) {
    if (b.mult.is_inf()) {
      inf_values.push_back(b.value);
    } else {
      BigInt m = b.mult.finite();
      if (m > 4096) throw UnsupportedSpectrum("finite block multiplicity too large to pack");
      for (BigInt i = 0; i < m; ++i) prefix_values.push_back(b.value);
    }
  }

  if (!S.has_rule()) {
    if (inf_values.empty()) throw UnsupportedSpectrum("no infinite part to enumerate");
    // round-robin over the infinite blocks: value p occupies residue class p
    if (inf_values.size() == 1)
      return DiagOpSeq(EigenForm::Plain, RealSeqRep(std::move(prefix_values), ConstTail{inf_values[0]}));
    return DiagOpSeq(EigenForm::Plain, RealSeqRep(std::move(prefix_values), PeriodicTail{inf_values}));
  }

  if (!inf_values.empty())
    throw UnsupportedSpectrum("cannot interleave infinite blocks with a dyadic rule tail");
  if (const auto* c = std::get_if<DimConstTail>(&S.rule_mult())) {
    if (c->value.is_inf())
      throw UnsupportedSpectrum("infinitely many infinite rule blocks have no round-robin listing");
    if (c->value == ExtNat(1)) {
      // weights 2^n for n = rule_start, rule_start+1, ...
      for (auto& v : prefix_values) {
        if (v < 0) throw UnsupportedSpectrum("negative finite blocks cannot join a weight-form listing");
        v += 1;  // eigenvalue -> weight
      }
      GeometricTail tail{rat_pow(Rational(2), S.rule_start()), Rational(2)};
      return DiagOpSeq(EigenForm::WeightSeq, RealSeqRep(std::move(prefix_values), tail));
    }
    throw UnsupportedSpectrum("rule multiplicities above one repeat values; no geometric listing exists");
  }
  const auto& cyc = std::get<DimPeriodicTail>(S.rule_mult()).cycle;
  BigInt cycle_sum = 0;
  long long one_pos = -1;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    cycle_sum += cyc[i].finite();
    if (!cyc[i].is_zero()) one_pos = static_cast<long long>(i);
  }
  if (cycle_sum != 1)
    throw UnsupportedSpectrum("rule pattern must select one block per cycle to stay geometric");
  for (auto& v : prefix_values) {
    if (v < 0) throw UnsupportedSpectrum("negative finite blocks cannot join a weight-form listing");
    v += 1;
  }
  const long long q = static_cast<long long>(cyc.size());
  GeometricTail tail{rat_pow(Rational(2), S.rule_start() + one_pos), rat_pow(Rational(2), q)};
  return DiagOpSeq(EigenForm::WeightSeq, RealSeqRep(std::move(prefix_values), tail));
}

}  // namespace dg
