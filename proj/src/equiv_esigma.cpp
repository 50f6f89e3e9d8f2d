#include <algorithm>
#include <functional>

#include "domaingauge/equiv.hpp"
#include "domaingauge/errors.hpp"

// Deciding the window-sum domination relation. The definition quantifies
// over all windows (n, l) for an existential enlargement k; the algorithm
// rests on three exact reductions:
//
//  * Infinite entries: a window holding an infinite entry forces the
//    enlarged opposite window to hold one too. For finitely many infinite
//    entries this is precisely the Hausdorff-distance condition between the
//    two position sets; a Const(inf) tail against a finite tail is
//    unsatisfiable for every k.
//
//  * Equal tail means: discrepancies between window sums are then uniformly
//    bounded, so some k works, and any violation of a fixed k recurs inside
//    one joint tail cycle. A finite "stabilization box" therefore decides
//    the relation at each k, and scanning k upward yields the minimal one.
//
//  * Distinct tail means: long tail windows of the denser sequence outgrow
//    any enlargement, giving a closed-form violating window per k.

namespace dg {

std::string to_string(SigmaReason r) {
  switch (r) {
    case SigmaReason::InfCountMismatch: return "inf_count_mismatch";
    case SigmaReason::DensityMismatch: return "density_mismatch";
    case SigmaReason::PrefixObstruction: return "prefix_obstruction";
  }
  return "?";
}

namespace {

bool window_leq(const DimSeqRep& x, const DimSeqRep& y, const BigInt& k, const BigInt& n, const BigInt& l) {
  return window_sum(x, n, l) <= window_sum(y, n - k, l + 2 * k);
}

void check_witness(const DimSeqRep& a, const DimSeqRep& b, const SigmaWitness& w) {
  const DimSeqRep& lhs = w.side == 1 ? a : b;
  const DimSeqRep& rhs = w.side == 1 ? b : a;
  if (window_leq(lhs, rhs, w.k, w.n, w.l))
    throw InternalInvariantFailure("emitted window-sum witness does not violate its inequality");
}

BigInt hausdorff_distance(const std::vector<long long>& A, const std::vector<long long>& B) {
  // both nonempty, sorted
  auto one_sided = [](const std::vector<long long>& X, const std::vector<long long>& Y) {
    BigInt worst = 0;
    for (long long x : X) {
      auto it = std::lower_bound(Y.begin(), Y.end(), x);
      BigInt best = -1;
      if (it != Y.end()) best = BigInt(*it - x);
      if (it != Y.begin()) {
        BigInt d(x - *std::prev(it));
        if (best < 0 || d < best) best = d;
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_sided(A, B), one_sided(B, A));
}

}  // namespace

SigmaBoxResult esigma_box(const DimSeqRep& a, const DimSeqRep& b, const BigInt& k, const BigInt& n_max,
                          const BigInt& l_max) {
  if (n_max > 20000000 || l_max > 20000000) throw ParseError("esigma_box range too large");
  const long long nm = n_max.convert_to<long long>();
  const long long lm = l_max.convert_to<long long>();
  for (long long n = 0; n <= nm; ++n) {
    for (long long l = 0; l <= lm; ++l) {
      if (!window_leq(a, b, k, n, l)) return {false, SigmaWitness{k, 1, n, l}};
      if (!window_leq(b, a, k, n, l)) return {false, SigmaWitness{k, 2, n, l}};
    }
  }
  return {true, std::nullopt};
}

SigmaBox esigma_stabilization_box(const DimSeqRep& a, const DimSeqRep& b, const BigInt& k) {
  const BigInt maxlen(std::max(a.prefix_len(), b.prefix_len()));
  if (a.tail_is_inf() || b.tail_is_inf()) {
    // binding windows live inside the prefixes; one slot past them witnesses
    // an infinite tail against a finite one
    return {maxlen + k + 2, maxlen + k + 2};
  }
  const BigInt L = big_lcm(BigInt(a.period()), BigInt(b.period()));
  return {maxlen + k + L + 1, maxlen + L + 1};
}

namespace {

SigmaVerdict refute(const DimSeqRep& a, const DimSeqRep& b, SigmaReason reason, const BigInt& k_cap,
                    const std::function<SigmaWitness(const BigInt&)>& witness_for_k) {
  SigmaVerdict v;
  v.equivalent = false;
  v.reason = reason;
  v.k_cap = k_cap;
  for (BigInt k = 0; k <= k_cap; ++k) {
    SigmaWitness w = witness_for_k(k);
    check_witness(a, b, w);
    v.witnesses.push_back(std::move(w));
  }
  return v;
}

}  // namespace

SigmaVerdict decide_esigma(const DimSeqRep& a, const DimSeqRep& b) {
  const BigInt len_a(a.prefix_len()), len_b(b.prefix_len());
  const BigInt maxlen = std::max(len_a, len_b);
  const BigInt L = big_lcm(BigInt(std::max<long long>(a.period(), 1)), BigInt(std::max<long long>(b.period(), 1)));
  const BigInt k_cap = len_a + len_b + 4 * L + 8;

  const bool ta = a.tail_is_inf(), tb = b.tail_is_inf();

  auto equivalent_from_scan = [&](const BigInt& k_lo, const BigInt& k_hi) -> SigmaVerdict {
    for (BigInt k = k_lo; k <= k_hi; ++k) {
      SigmaBox box = esigma_stabilization_box(a, b, k);
      if (esigma_box(a, b, k, box.n_max, box.l_max).holds) {
        SigmaVerdict v;
        v.equivalent = true;
        v.k = k;
        v.box_n = box.n_max;
        v.box_l = box.l_max;
        return v;
      }
    }
    throw InternalInvariantFailure("derived sufficient enlargement failed its box check");
  };

  if (ta != tb) {
    // one sequence has an infinite tail of infinite entries, the other only
    // finitely many: a window on the infinite side past both prefixes and
    // past the enlargement has no infinite partner
    return refute(a, b, SigmaReason::InfCountMismatch, k_cap, [&](const BigInt& k) {
      return SigmaWitness{k, ta ? 1 : 2, maxlen + k + 1, 0};
    });
  }

  if (ta && tb) {
    // all constraints with a window touching either tail hold trivially;
    // only prefix-contained windows bind, and k = maxlen empties them
    return equivalent_from_scan(0, maxlen + 2);
  }

  const auto infs_a = a.inf_positions();
  const auto infs_b = b.inf_positions();
  if (infs_a.empty() != infs_b.empty()) {
    const bool a_has = !infs_a.empty();
    const BigInt i(a_has ? infs_a.front() : infs_b.front());
    return refute(a, b, SigmaReason::InfCountMismatch, k_cap,
                  [&](const BigInt& k) { return SigmaWitness{k, a_has ? 1 : 2, i, 0}; });
  }

  const Rational m_a = a.tail_mean(), m_b = b.tail_mean();
  if (m_a != m_b) {
    const bool a_heavier = m_a > m_b;
    const DimSeqRep& h = a_heavier ? a : b;
    const DimSeqRep& u = a_heavier ? b : a;
    const Rational dm = (a_heavier ? m_a - m_b : m_b - m_a);
    const BigInt p_u(u.period());
    const BigInt vmax_u = u.tail_max();
    return refute(a, b, SigmaReason::DensityMismatch, k_cap, [&](const BigInt& k) {
      // A window of M full joint cycles in the dense tail sums to exactly
      // M*L*mean_h from any tail start; the enlarged sparse window cannot
      // reach it once M*L*(mean gap) exceeds the enlargement slack.
      Rational slack = Rational((2 * k + p_u) * vmax_u);
      BigInt M = rat_floor(slack / (Rational(L) * dm)) + 1;
      SigmaWitness w;
      w.k = k;
      w.side = a_heavier ? 1 : 2;
      w.n = maxlen + k;
      w.l = M * L - 1;
      (void)h;
      return w;
    });
  }

  BigInt prefix_mass_a = 0, prefix_mass_b = 0;
  for (const auto& v : a.prefix())
    if (!v.is_inf()) prefix_mass_a += v.finite();
  for (const auto& v : b.prefix())
    if (!v.is_inf()) prefix_mass_b += v.finite();

  if (m_a == 0 && infs_a.empty() && prefix_mass_a != prefix_mass_b) {
    // both sequences are finitely supported; totals are an invariant
    const bool a_heavier = prefix_mass_a > prefix_mass_b;
    return refute(a, b, SigmaReason::PrefixObstruction, k_cap,
                  [&](const BigInt& k) { return SigmaWitness{k, a_heavier ? 1 : 2, 0, maxlen}; });
  }

  // Equivalent. Lower bound: infinite entries must pair within distance k.
  BigInt k_lo = 0;
  if (!infs_a.empty()) k_lo = hausdorff_distance(infs_a, infs_b);

  BigInt k_hi;
  if (m_a > 0) {
    // window-sum discrepancy bound: k*mean must absorb prefix mass plus one
    // cycle of slack on each side
    const Rational d_a = Rational(prefix_mass_a) + Rational(BigInt(a.period()) * a.tail_max());
    const Rational d_b = Rational(prefix_mass_b) + Rational(BigInt(b.period()) * b.tail_max());
    const Rational d_a_deficit = m_a * Rational(len_a) + Rational(BigInt(a.period()) * a.tail_max());
    const Rational d_b_deficit = m_a * Rational(len_b) + Rational(BigInt(b.period()) * b.tail_max());
    const BigInt k1 = rat_ceil((d_a + d_b_deficit) / m_a);
    const BigInt k2 = rat_ceil((d_b + d_a_deficit) / m_a);
    k_hi = std::max(k_lo, std::max(k1, k2));
  } else {
    k_hi = std::max(k_lo, BigInt(len_a + len_b));
  }
  return equivalent_from_scan(k_lo, k_hi);
}

}  // namespace dg
