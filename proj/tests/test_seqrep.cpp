#include <doctest.h>

#include "domaingauge/dimseq.hpp"
#include "domaingauge/errors.hpp"
#include "domaingauge/realseq.hpp"
#include "generators.hpp"

using namespace dg;

TEST_CASE("eval examples") {
  RealSeqRep s({Rational(1), Rational(-1, 2), Rational(4)}, ConstTail{0});
  CHECK(s.eval(0) == Rational(1));
  CHECK(s.eval(-3) == Rational(0));
  RealSeqRep p({}, PeriodicTail{{Rational(2), Rational(5)}});
  CHECK(p.eval(3) == Rational(5));
}

TEST_CASE("tail normalization") {
  // repeated cycle collapses
  RealSeqRep p({}, PeriodicTail{{Rational(1), Rational(2), Rational(1), Rational(2)}});
  CHECK(p.period() == 2);
  // period-1 cycle becomes a constant
  RealSeqRep c({}, PeriodicTail{{Rational(7)}});
  CHECK(c.tail_class() == TailClass::Const);
  // zero-slope affine becomes a constant
  RealSeqRep a({}, AffineTail{Rational(0), Rational(3)});
  CHECK(a.tail_class() == TailClass::Const);
  // strided constant lane becomes periodic
  RealSeqRep st({}, StridedTail{3, 1, AffineTail{Rational(0), Rational(5)}});
  CHECK(st.tail_class() == TailClass::Periodic);
  CHECK(st.eval(1) == Rational(5));
  CHECK(st.eval(2) == Rational(0));
  CHECK(st.eval(4) == Rational(5));
  CHECK_THROWS_AS(RealSeqRep({}, GeometricTail{Rational(1), Rational(1)}), ParseError);
  CHECK_THROWS_AS(RealSeqRep({}, GeometricTail{Rational(0), Rational(2)}), ParseError);
}

TEST_CASE("strided eval") {
  // offsets 0,1,2,... with stride 2, phase 1: zeros at even offsets, 3*j+1 on the lane
  RealSeqRep s({Rational(9)}, StridedTail{2, 1, AffineTail{Rational(3), Rational(1)}});
  CHECK(s.eval(0) == Rational(9));
  CHECK(s.eval(1) == Rational(0));   // offset 0
  CHECK(s.eval(2) == Rational(1));   // offset 1, lane j=0
  CHECK(s.eval(3) == Rational(0));
  CHECK(s.eval(4) == Rational(4));   // lane j=1
}

TEST_CASE("representation canonicity: box equality matches 10x box") {
  testgen::Rng rng(20260810);
  for (int t = 0; t < 300; ++t) {
    RealSeqRep a = testgen::random_real_seq(rng);
    RealSeqRep b = (t % 3 == 0) ? a : testgen::random_real_seq(rng);
    bool box_eq = pointwise_equal(a, b);
    bool wide_eq = true;
    long long wide = 10 * equality_box(a, b);
    for (long long n = 0; n <= wide && wide_eq; ++n) wide_eq = a.eval(n) == b.eval(n);
    CHECK(box_eq == wide_eq);
  }
}

TEST_CASE("window_sum examples") {
  DimSeqRep inf_head({ExtNat::infinity()}, DimConstTail{ExtNat(0)});
  CHECK(window_sum(inf_head, 0, 5) == ExtNat::infinity());
  DimSeqRep alt({}, DimPeriodicTail{{ExtNat(1), ExtNat(2)}});
  CHECK(window_sum(alt, 0, 3) == ExtNat(6));
  CHECK(window_sum(alt, -4, 3) == ExtNat(0));
}

TEST_CASE("window_sum closed form matches direct summation") {
  testgen::Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    DimSeqRep s = testgen::random_dim_seq(rng);
    long long n = testgen::uniform(rng, -5, 12);
    long long l = testgen::uniform(rng, 0, 30);
    ExtNat direct(0);
    for (long long i = 0; i <= l; ++i) direct += s.eval(n + i);
    CHECK(window_sum(s, n, l) == direct);
  }
}

TEST_CASE("window_sum additivity") {
  testgen::Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    DimSeqRep s = testgen::random_dim_seq(rng);
    long long n = testgen::uniform(rng, -3, 10);
    long long l1 = testgen::uniform(rng, 0, 12);
    long long l2 = testgen::uniform(rng, 0, 12);
    CHECK(window_sum(s, n, l1 + l2 + 1) == extnat_sum({window_sum(s, n, l1), window_sum(s, n + l1 + 1, l2)}));
  }
}

TEST_CASE("window_sum monotone under entrywise domination") {
  testgen::Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    DimSeqRep s = testgen::random_dim_seq(rng, 0);
    // t = s plus one extra unit somewhere in the prefix
    auto prefix = s.prefix();
    if (prefix.empty()) prefix.push_back(s.eval(0));
    std::size_t i = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<long long>(prefix.size()) - 1));
    if (!prefix[i].is_inf()) prefix[i] = ExtNat(prefix[i].finite() + 1);
    DimSeqRep bigger(prefix, s.tail());
    long long n = testgen::uniform(rng, -2, 8);
    long long l = testgen::uniform(rng, 0, 15);
    CHECK(window_sum(s, n, l) <= window_sum(bigger, n, l));
  }
}

TEST_CASE("count_inf examples") {
  CHECK(count_inf(DimSeqRep({ExtNat::infinity(), ExtNat(0), ExtNat::infinity()}, DimConstTail{ExtNat(1)})) ==
        ExtNat(2));
  CHECK(count_inf(DimSeqRep({}, DimConstTail{ExtNat::infinity()})) == ExtNat::infinity());
  CHECK(count_inf(DimSeqRep({}, DimPeriodicTail{{ExtNat(0), ExtNat(3)}})) == ExtNat(0));
}

TEST_CASE("diverges examples") {
  CHECK_FALSE(diverges(DimSeqRep({ExtNat(5), ExtNat(2)}, DimConstTail{ExtNat(0)})));
  CHECK(diverges(DimSeqRep({}, DimPeriodicTail{{ExtNat(0), ExtNat(0), ExtNat(1)}})));
  CHECK(diverges(DimSeqRep({ExtNat::infinity()}, DimConstTail{ExtNat(0)})));
}

TEST_CASE("dim periodic tails reject infinite entries") {
  CHECK_THROWS_AS(DimSeqRep({}, DimPeriodicTail{{ExtNat(1), ExtNat::infinity()}}), ParseError);
}
