// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criteria 1-6 also feed every certificate they emit into the final
// self-verification pass.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "domaingauge/certificate.hpp"
#include "domaingauge/douglas.hpp"
#include "domaingauge/reductions.hpp"
#include "domaingauge/spectra.hpp"
#include "generators.hpp"

using namespace dg;
using Clock = std::chrono::steady_clock;

namespace {

struct Harness {
  int failures = 0;
  std::vector<Json> certificates;
  Clock::time_point suite_start = Clock::now();

  void criterion(const std::string& name, const std::string& what, const std::function<void()>& body) {
    auto t0 = Clock::now();
    try {
      body();
      double secs = std::chrono::duration<double>(Clock::now() - t0).count();
      std::printf("[%s] PASS  (%.2fs)  %s\n", name.c_str(), secs, what.c_str());
    } catch (const std::exception& ex) {
      ++failures;
      std::printf("[%s] FAIL  %s: %s\n", name.c_str(), what.c_str(), ex.what());
    }
    std::fflush(stdout);
  }
};

struct CheckFail : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw CheckFail(msg);
}

void require_runtime(const Clock::time_point& t0, double limit_s, const std::string& what) {
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  require(secs < limit_s, what + " exceeded its runtime budget: " + std::to_string(secs) + "s");
}

RealSeqRep sample_pair_partner(testgen::Rng& rng, const RealSeqRep& a, int mode) {
  switch (mode) {
    case 0: return testgen::bounded_perturbation(rng, a);
    case 1: return testgen::random_real_seq(rng);
    default: return a;
  }
}

DiagOpSeq sample_acceptance_operator(testgen::Rng& rng) {
  switch (testgen::uniform(rng, 0, 2)) {
    case 0: return DiagOpSeq(EigenForm::Plain, testgen::random_real_seq(rng));
    case 1: {
      std::vector<Rational> prefix(static_cast<std::size_t>(testgen::uniform(rng, 0, 3)));
      for (auto& v : prefix) v = 1 + testgen::positive_rational(rng);
      RealTail tail;
      switch (testgen::uniform(rng, 0, 3)) {
        case 0: tail = ConstTail{1 + testgen::positive_rational(rng)}; break;
        case 1: {
          std::vector<Rational> cyc(static_cast<std::size_t>(testgen::uniform(rng, 1, 3)));
          for (auto& v : cyc) v = 1 + testgen::positive_rational(rng);
          tail = PeriodicTail{cyc};
          break;
        }
        case 2: tail = AffineTail{testgen::positive_rational(rng), 1 + testgen::positive_rational(rng)}; break;
        default: tail = GeometricTail{1 + testgen::positive_rational(rng), Rational(1) + testgen::positive_rational(rng, 3, 1)}; break;
      }
      return DiagOpSeq(EigenForm::WeightSeq, RealSeqRep(std::move(prefix), std::move(tail)));
    }
    default: {
      RealSeqRep x = testgen::random_real_seq(rng);
      return psi(x);  // exponential-form operators arise as embedding images
    }
  }
}

DiagOpSeq related_acceptance_operator(testgen::Rng& rng, const DiagOpSeq& A) {
  auto prefix = A.seq().prefix();
  for (auto& v : prefix) {
    Rational d = testgen::small_rational(rng, 3, 2);
    switch (A.form()) {
      case EigenForm::Plain: v += d; break;
      case EigenForm::WeightSeq: v = std::max(Rational(1), Rational(v + d)); break;
      case EigenForm::ExpHalf: v = std::max(Rational(0), Rational(v + d)); break;
    }
  }
  return DiagOpSeq(A.form(), RealSeqRep(std::move(prefix), A.seq().tail()), A.index_scheme());
}

}  // namespace

int main() {
  Harness h;

  h.criterion("AC1", "exponential embedding: 1000 sequence pairs, edom(psi) == linf, runtime < 10s", [&] {
    auto t0 = Clock::now();
    testgen::Rng rng(11001);
    for (int t = 0; t < 1000; ++t) {
      RealSeqRep a = testgen::random_real_seq(rng);
      RealSeqRep b = sample_pair_partner(rng, a, t % 3);
      LinfVerdict lv = decide_linf(a, b);
      DiagOpSeq pa = psi(a), pb = psi(b);
      DomVerdict dv = decide_edom(pa, pb);
      require(lv.equivalent == dv.equal, "verdicts diverged at trial " + std::to_string(t));
      h.certificates.push_back(make_linf_certificate(a, b, lv));
      h.certificates.push_back(make_dom_certificate(pa, pb, dv));
    }
    require_runtime(t0, 10.0, "criterion 1");
  });

  h.criterion("AC2", "weight-log map: 1000 operator pairs, linf(phi) == edom", [&] {
    testgen::Rng rng(11002);
    for (int t = 0; t < 1000; ++t) {
      DiagOpSeq A = sample_acceptance_operator(rng);
      DiagOpSeq B;
      switch (t % 3) {
        case 0: B = related_acceptance_operator(rng, A); break;
        case 1: B = sample_acceptance_operator(rng); break;
        default: B = A; break;
      }
      DomVerdict dv = decide_edom(A, B);
      LinfVerdict pv = decide_linf_phi(phi(A), phi(B));
      require(dv.equal == pv.equivalent, "verdicts diverged at trial " + std::to_string(t));
      h.certificates.push_back(make_dom_certificate(A, B, dv));
      h.certificates.push_back(make_linf_phi_certificate(A, B, pv));
    }
  });

  h.criterion("AC3", "interleave map: 1000 pairs verdict-preserving, 1000 distinct pairs separated", [&] {
    testgen::Rng rng(11003);
    for (int t = 0; t < 1000; ++t) {
      RealSeqRep x = testgen::random_real_seq(rng);
      RealSeqRep y = sample_pair_partner(rng, x, t % 3);
      LinfVerdict direct = decide_linf(x, y);
      LinfVerdict lifted = decide_linf(tilde(x).seq, tilde(y).seq);
      require(direct.equivalent == lifted.equivalent, "verdict changed under the interleave at trial " + std::to_string(t));
      h.certificates.push_back(make_linf_certificate(x, y, direct));
    }
    int separated = 0, trials = 0;
    while (separated < 1000) {
      ++trials;
      require(trials < 20000, "could not find enough distinct pairs");
      RealSeqRep x = testgen::random_real_seq(rng);
      RealSeqRep y = testgen::random_real_seq(rng);
      auto diff = first_difference(x, y);
      if (!diff) continue;
      RealSeqRep tx = tilde(x).seq, ty = tilde(y).seq;
      bool sep = tx.eval(2 * *diff) != ty.eval(2 * *diff) || tx.eval(2 * *diff + 1) != ty.eval(2 * *diff + 1);
      require(sep, "distinct inputs collided after the interleave");
      ++separated;
    }
  });

  h.criterion("AC4", "dyadic spectrum round trip: 500 divergent sequences across the inf strata", [&] {
    testgen::Rng rng(11004);
    const int strata[] = {0, 1, 2, 3, -1};
    for (int t = 0; t < 500; ++t) {
      DimSeqRep alpha = testgen::divergent_dim_seq(rng, strata[t % 5]);
      SpectrumRep s = psi_k(alpha);
      require(pointwise_equal(assoc_dims(s), alpha), "round trip failed at trial " + std::to_string(t));
    }
  });

  h.criterion("AC5", "window-sum relation: 500 pairs against the box oracle, 200 composed triples", [&] {
    testgen::Rng rng(11005);
    for (int t = 0; t < 500; ++t) {
      DimSeqRep a = testgen::random_dim_seq(rng);
      DimSeqRep b = (t % 2 == 0) ? testgen::sigma_equivalent_neighbour(rng, a) : testgen::random_dim_seq(rng);
      SigmaVerdict v = decide_esigma(a, b);
      if (v.equivalent) {
        require(esigma_box(a, b, v.k, v.box_n, v.box_l).holds, "box oracle refuted the verdict");
        require(esigma_box(a, b, v.k, 3 * v.box_n, 3 * v.box_l).holds, "3x box oracle refuted the verdict");
      } else {
        for (const auto& w : v.witnesses) {
          const DimSeqRep& lhs = w.side == 1 ? a : b;
          const DimSeqRep& rhs = w.side == 1 ? b : a;
          require(window_sum(lhs, w.n, w.l) > window_sum(rhs, w.n - w.k, w.l + 2 * w.k),
                  "a recorded witness does not violate its inequality");
        }
      }
      h.certificates.push_back(make_esigma_certificate(a, b, v));
    }
    int done = 0;
    while (done < 200) {
      DimSeqRep a = testgen::random_dim_seq(rng);
      DimSeqRep b = testgen::sigma_equivalent_neighbour(rng, a);
      DimSeqRep c = testgen::sigma_equivalent_neighbour(rng, b);
      SigmaVerdict ab = decide_esigma(a, b), bc = decide_esigma(b, c);
      if (!ab.equivalent || !bc.equivalent) continue;
      BigInt k = compose_sigma_witnesses(ab.k, bc.k);
      SigmaBox box = esigma_stabilization_box(a, c, k);
      require(esigma_box(a, c, k, box.n_max, box.l_max).holds, "composed enlargement failed");
      ++done;
    }
  });

  h.criterion("AC6", "range-inclusion oracle: 500 random + 50 engineered pairs, two routes agree, < 5s", [&] {
    auto t0 = Clock::now();
    std::mt19937_64 rng(11006);
    std::normal_distribution<double> g;
    auto rnd = [&](int n) {
      Eigen::MatrixXd m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = g(rng);
      return m;
    };
    const double tol = 1e-8;
    for (int t = 0; t < 500; ++t) {
      Eigen::MatrixXd A = rnd(6), B = rnd(6);
      DouglasResult r = douglas_findim(A, B, tol);
      require(r.included == douglas_psd_criterion(A, B, tol), "criteria disagreed on a random pair");
      h.certificates.push_back(make_douglas_certificate(A, B, tol, r));
    }
    for (int t = 0; t < 50; ++t) {
      int rank = 1 + t % 5;
      Eigen::MatrixXd u(6, rank), vmat(rank, 6);
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < rank; ++j) u(i, j) = g(rng);
      for (int j = 0; j < rank; ++j)
        for (int i = 0; i < 6; ++i) vmat(j, i) = g(rng);
      Eigen::MatrixXd B = u * vmat;
      Eigen::MatrixXd A = (t % 2 == 0) ? Eigen::MatrixXd(B * rnd(6)) : rnd(6);
      DouglasResult r = douglas_findim(A, B, tol);
      require(r.included == douglas_psd_criterion(A, B, tol), "criteria disagreed on an engineered pair");
      require(r.included == (t % 2 == 0), "engineered inclusion decided wrongly");
      h.certificates.push_back(make_douglas_certificate(A, B, tol, r));
    }
    require_runtime(t0, 5.0, "criterion 6");
  });

  h.criterion("AC7", "resolvent convergence: dist(mult(8, x/n + 1), 1) <= 1/n, nonincreasing, <= 1e-2 at n=100", [&] {
    auto id = identity_op(1ll << 8);
    double prev = 1e100, last = 0;
    for (int n = 1; n <= 100; ++n) {
      auto a = mult_op(8, Rational(1, n), Rational(1));
      double d = srt_dist(a, id);
      require(d <= 1.0 / n, "distance exceeded 1/n at n = " + std::to_string(n));
      require(d <= prev, "distance increased at n = " + std::to_string(n));
      prev = d;
      last = d;
    }
    require(last <= 1e-2, "distance at n = 100 above 1e-2");
  });

  h.criterion("AC8", "Wiener atom test: decreasing averages, < 0.05 at T = 1e4, unit point-mass control, < 60s", [&] {
    auto t0 = Clock::now();
    auto cf = [](double t) { return cantor_cf(t, 40); };
    double a2 = wiener_average(cf, 1e2, 1000001);
    double a3 = wiener_average(cf, 1e3, 1000001);
    double a4 = wiener_average(cf, 1e4, 1000001);
    require(a3 < a2 && a4 < a3, "averages are not strictly decreasing");
    require(a4 < 0.05, "average at T = 1e4 is " + std::to_string(a4));
    auto delta0 = [](double) { return std::complex<double>(1.0, 0.0); };
    double control = wiener_average(delta0, 1e4, 100001);
    require(std::fabs(control - 1.0) <= 1e-6, "point-mass control drifted from 1");
    require_runtime(t0, 60.0, "criterion 8");
  });

  h.criterion("AC9", "moments: m0 = 1 and m1 = 1/2 exact; empirical moments converge at rate p * 3^-d", [&] {
    auto m = cantor_moments(3);
    require(m[0] == Rational(1), "m0 != 1");
    require(m[1] == Rational(1, 2), "m1 != 1/2");
    for (int p = 1; p <= 3; ++p) {
      Rational prev_err(-1);
      for (int d = 2; d <= 10; ++d) {
        Rational err = rat_abs(cantor_empirical_moment(d, p) - m[static_cast<std::size_t>(p)]);
        require(err <= Rational(p) * rat_pow(Rational(1, 3), d),
                "moment error above p * 3^-d at p = " + std::to_string(p) + ", d = " + std::to_string(d));
        if (prev_err >= 0) require(err <= prev_err, "moment error failed to shrink");
        prev_err = err;
      }
    }
  });

  h.criterion("AC10", "self-verification of every emitted certificate; suite wall clock < 5 minutes", [&] {
    std::string why;
    for (std::size_t i = 0; i < h.certificates.size(); ++i) {
      require(verify_certificate(h.certificates[i], &why),
              "certificate " + std::to_string(i) + " failed: " + why);
    }
    std::printf("       verified %zu certificates\n", h.certificates.size());
    require_runtime(h.suite_start, 300.0, "full suite");
  });

  if (h.failures > 0) {
    std::printf("%d criterion(s) failed\n", h.failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
