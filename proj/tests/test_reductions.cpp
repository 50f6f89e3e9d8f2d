#include <doctest.h>

#include <cmath>

#include "domaingauge/errors.hpp"
#include "domaingauge/reductions.hpp"
#include "generators.hpp"

using namespace dg;

TEST_CASE("tilde maps the worked example") {
  RealSeqRep x({Rational(1), Rational(-1, 2), Rational(4)}, ConstTail{Rational(0)});
  RealSeqRep expect({Rational(1), Rational(0), Rational(0), Rational(1, 2), Rational(4), Rational(0)},
                    ConstTail{Rational(0)});
  CHECK(pointwise_equal(tilde(x).seq, expect));
}

TEST_CASE("tilde of zero is zero, tilde of a negative constant alternates") {
  CHECK(pointwise_equal(tilde(RealSeqRep::zero()).seq, RealSeqRep::zero()));
  RealSeqRep neg = RealSeqRep::constant(Rational(-3));
  RealSeqRep expect({}, PeriodicTail{{Rational(0), Rational(3)}});
  CHECK(pointwise_equal(tilde(neg).seq, expect));
}

TEST_CASE("tilde interleaves pointwise for every tail kind") {
  testgen::Rng rng(500);
  for (int t = 0; t < 300; ++t) {
    RealSeqRep x = testgen::random_real_seq(rng);
    RealSeqRep tx = tilde(x).seq;
    for (long long n = 0; n < 30; ++n) {
      Rational v = x.eval(n);
      if (v >= 0) {
        CHECK(tx.eval(2 * n) == v);
        CHECK(tx.eval(2 * n + 1) == Rational(0));
      } else {
        CHECK(tx.eval(2 * n) == Rational(0));
        CHECK(tx.eval(2 * n + 1) == -v);
      }
    }
    CHECK(is_nonnegative(tx));
  }
}

TEST_CASE("tilde preserves the bounded-difference verdict") {
  testgen::Rng rng(501);
  for (int t = 0; t < 300; ++t) {
    RealSeqRep x = testgen::random_real_seq(rng);
    RealSeqRep y = (t % 2 == 0) ? testgen::bounded_perturbation(rng, x) : testgen::random_real_seq(rng);
    bool direct = decide_linf(x, y).equivalent;
    bool lifted = decide_linf(tilde(x).seq, tilde(y).seq).equivalent;
    CHECK(direct == lifted);
  }
}

TEST_CASE("tilde is injective: distinct inputs give distinct outputs at a constructed index") {
  testgen::Rng rng(502);
  for (int t = 0; t < 300; ++t) {
    RealSeqRep x = testgen::random_real_seq(rng);
    RealSeqRep y = testgen::random_real_seq(rng);
    auto diff = first_difference(x, y);
    if (!diff) continue;
    RealSeqRep tx = tilde(x).seq, ty = tilde(y).seq;
    bool separated = tx.eval(2 * *diff) != ty.eval(2 * *diff) || tx.eval(2 * *diff + 1) != ty.eval(2 * *diff + 1);
    CHECK(separated);
  }
}

TEST_CASE("psi maps the worked example to explicit eigenvalues") {
  RealSeqRep alpha({Rational(1), Rational(-1, 2), Rational(4)}, ConstTail{Rational(0)});
  DiagOpSeq op = psi(alpha);
  CHECK(op.form() == EigenForm::ExpHalf);
  const double expected[] = {std::exp(0.5) - 1, 0.0, 0.0, std::exp(0.25) - 1, std::exp(2.0) - 1, 0.0, 0.0};
  for (int n = 0; n < 7; ++n) CHECK(op.eigen_double(n) == doctest::Approx(expected[n]).epsilon(1e-12));
  CHECK(pointwise_equal(psi(RealSeqRep::zero()).seq(), RealSeqRep::zero()));
}

TEST_CASE("resolvent transform of an embedded sequence is the exponential of the negated interleave") {
  testgen::Rng rng(503);
  for (int t = 0; t < 200; ++t) {
    RealSeqRep alpha = testgen::random_real_seq(rng);
    auto tr = t_transform(psi(alpha), 2);
    REQUIRE(tr.exp_neg_arg.has_value());
    CHECK(pointwise_equal(*tr.exp_neg_arg, tilde(alpha).seq));
  }
}

TEST_CASE("phi of the zero operator is the zero sequence") {
  auto img = phi(zero_operator());
  REQUIRE(img.exact.has_value());
  CHECK(pointwise_equal(*img.exact, RealSeqRep::zero()));
}

TEST_CASE("phi inverts the exponential embedding exactly") {
  // phi(psi(alpha)) = -tilde(alpha) whenever the negation stays in class
  testgen::Rng rng(504);
  for (int t = 0; t < 200; ++t) {
    RealSeqRep alpha = testgen::random_real_seq(rng);
    if (alpha.tail_class() == TailClass::Geometric) continue;
    if (alpha.tail_class() == TailClass::Strided && !alpha.lane().inner_affine) continue;
    auto img = phi(psi(alpha));
    REQUIRE(img.exact.has_value());
    RealSeqRep tx = tilde(alpha).seq;
    for (long long n = 0; n < 25; ++n) CHECK(img.exact->eval(n) == -tx.eval(n));
  }
}

TEST_CASE("phi image of geometric eigenvalues has the expected asymptotic slope") {
  DiagOpSeq A(EigenForm::Plain, RealSeqRep({}, GeometricTail{Rational(1), Rational(2)}));
  auto img = phi(A);
  CHECK_FALSE(img.exact.has_value());
  const double slope = img.eval_double(4000) - img.eval_double(3999);
  CHECK(slope == doctest::Approx(-2.0 * std::log(2.0)).epsilon(1e-6));
}

TEST_CASE("psi_k produces the dyadic spectrum of a dimension sequence") {
  DimSeqRep alpha({ExtNat::infinity()}, DimConstTail{ExtNat(0)});
  SpectrumRep s = psi_k(alpha);
  REQUIRE(s.blocks().size() == 1);
  CHECK(s.blocks()[0].value == Rational(0));
  CHECK(s.blocks()[0].mult.is_inf());
  CHECK(pointwise_equal(assoc_dims(s), alpha));
}

TEST_CASE("psi_k worked example with a mixed prefix") {
  DimSeqRep alpha({ExtNat(2), ExtNat::infinity()}, DimPeriodicTail{{ExtNat(1)}});
  SpectrumRep s = psi_k(alpha);
  REQUIRE(s.blocks().size() == 2);
  CHECK(s.blocks()[0].value == Rational(0));
  CHECK(s.blocks()[0].mult == ExtNat(2));
  CHECK(s.blocks()[1].value == Rational(1));
  CHECK(s.blocks()[1].mult.is_inf());
  CHECK(pointwise_equal(assoc_dims(s), alpha));
}

TEST_CASE("psi_k rejects convergent totals") {
  DimSeqRep finite({ExtNat(5), ExtNat(2)}, DimConstTail{ExtNat(0)});
  CHECK_THROWS_AS(psi_k(finite), NotInX0);
}

TEST_CASE("psi_k round trip over the divergence strata") {
  testgen::Rng rng(505);
  int done = 0;
  while (done < 250) {
    DimSeqRep alpha = testgen::random_dim_seq(rng);
    if (!diverges(alpha)) continue;
    SpectrumRep s = psi_k(alpha);
    CHECK(pointwise_equal(assoc_dims(s), alpha));
    ++done;
  }
}

TEST_CASE("bireduction harness finds no discrepancies") {
  auto rep = verify_bireduction(20260810, 250);
  CHECK(rep.trials == 250);
  for (const auto& d : rep.discrepancies) {
    CAPTURE(d.direction);
    CAPTURE(d.trial);
    CAPTURE(d.detail);
    CHECK(false);
  }
  CHECK(rep.ok());
}
