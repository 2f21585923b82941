#include <gtest/gtest.h>

#include "k3atlas/curves.hpp"
#include "k3atlas/modular.hpp"
#include "oracles.hpp"

namespace k3atlas {
namespace {

Rational stored(const FixedReal &x) {
  return Rational(x.mantissa(), Integer(1) << static_cast<unsigned long>(x.precision()));
}

Rational radius(const FixedReal &x) {
  return Rational(x.error_ulps(), Integer(1) << static_cast<unsigned long>(x.precision()));
}

Rational pow2_neg(int e) { return Rational(Integer(1), Integer(1) << static_cast<unsigned long>(e)); }

TEST(ModularTest, DefaultPrecision) {
  EXPECT_EQ(default_precision(3), 128);
  EXPECT_EQ(default_precision(163), 151);
  EXPECT_GE(default_precision(1003), 128);
}

TEST(ModularTest, ContextValidation) {
  EXPECT_THROW(ModularContext(0), std::invalid_argument);
  EXPECT_THROW(ModularContext(-5), std::invalid_argument);
  EXPECT_THROW(ModularContext(7), std::invalid_argument);
  EXPECT_THROW(ModularContext(5), std::invalid_argument);
  EXPECT_THROW(ModularContext(99), std::invalid_argument);  // 9 * 11
  EXPECT_THROW(ModularContext(11, 8), std::invalid_argument);
  const ModularContext ctx(163);
  EXPECT_EQ(ctx.precision(), 151);
  EXPECT_EQ(ctx.working_precision(), 151 + ModularContext::kGuardBits);
  EXPECT_GT(ctx.terms(), 2);
}

TEST(ModularTest, SchlafliAtThreeIsTwo) {
  for (int bits : {64, 128, 200}) {
    const FixedReal w = schlafli_w(ModularContext(3, bits));
    const Rational gap = (stored(w) - Rational(2)).abs();
    EXPECT_LE(gap, pow2_neg(bits - 4)) << bits;
    EXPECT_LE(gap, radius(w)) << bits;
  }
}

// The real root of the (a3, b3) cubic, located independently by bisection.
void expect_matches_cubic_root(long d, long a3, long b3, double lo, double hi) {
  const ModularContext ctx(d);
  const FixedReal w = schlafli_w(ctx);
  const Rational root = testing::bisect_cubic_root(
      a3, b3, Rational(Integer(static_cast<long>(lo * 1e6)), Integer(1000000)),
      Rational(Integer(static_cast<long>(hi * 1e6)), Integer(1000000)), ctx.precision() + 16);
  const Rational gap = (stored(w) - root).abs();
  EXPECT_LE(gap, radius(w) + pow2_neg(ctx.precision() + 8)) << "d=" << d;
  EXPECT_LE(gap, pow2_neg(ctx.precision() - 8)) << "d=" << d;
}

TEST(ModularTest, SchlafliMatchesCubicRootOracle) {
  expect_matches_cubic_root(11, -1, 2, 1.0, 1.2);
  expect_matches_cubic_root(163, -17, 150, 0.02, 0.03);
  expect_matches_cubic_root(67, 7, 26, 0.1, 0.2);
}

TEST(ModularTest, SchlafliKnownDigits) {
  EXPECT_EQ(schlafli_w(ModularContext(11)).to_fixed(12), "1.087378025384");
  EXPECT_EQ(schlafli_w(ModularContext(163)).to_fixed(12), "0.026586495296");
}

TEST(ModularTest, SchlafliDecreasesWithD) {
  FixedReal prev = schlafli_w(ModularContext(3, 128));
  for (long d : {11L, 19L, 43L, 67L, 163L}) {
    const FixedReal w = schlafli_w(ModularContext(d, 128));
    EXPECT_EQ(compare(w, prev), Ordering3::less) << d;
    prev = w;
  }
}

TEST(ModularTest, RecoversCatalogPairs) {
  for (long d : kClassNumberOneD) {
    const auto labels = published_tower_labels(d);
    ASSERT_TRUE(labels) << d;
    const RecoveredPair rp = recover_pair(ModularContext(d));
    EXPECT_EQ(rp.a3, labels->a3) << d;
    EXPECT_EQ(rp.b3, labels->b3) << d;
    EXPECT_TRUE(is_on_curve(CurveId::K3, RatPoint{Rational(rp.a3), Rational(rp.b3)}));
  }
}

TEST(ModularTest, TowerLabelsMatchCatalog) {
  const auto l163 = published_tower_labels(163);
  ASSERT_TRUE(l163);
  EXPECT_EQ(l163->a3, -17);
  EXPECT_EQ(l163->b3, 150);
  EXPECT_EQ(l163->alpha3, 2);
  EXPECT_EQ(l163->beta3, 6);
  EXPECT_FALSE(published_tower_labels(51));
}

TEST(ModularTest, NonClassNumberOneHasNoPair) {
  try {
    recover_pair(ModularContext(51), 2000);
    FAIL() << "expected RecoveryError";
  } catch (const RecoveryError &e) {
    EXPECT_NE(e.kind(), RecoveryError::Kind::multiple_candidates);
    EXPECT_LT(e.best_defect_log2(), 0.0);
  }
  EXPECT_THROW(j_invariant(ModularContext(51)), IntegralityError);
}

TEST(ModularTest, JInvariants) {
  const JInvariant j163 = j_invariant(ModularContext(163));
  EXPECT_EQ(j163.j, Integer("-262537412640768000"));
  ASSERT_TRUE(j163.gamma2);
  EXPECT_EQ(*j163.gamma2, -640320);

  const JInvariant j11 = j_invariant(ModularContext(11));
  EXPECT_EQ(j11.j, -32768);
  ASSERT_TRUE(j11.gamma2);
  EXPECT_EQ(*j11.gamma2, -32);

  const long expected_gamma2[] = {0, -32, -96, -960, -5280, -640320};
  for (std::size_t i = 0; i < 6; ++i) {
    const JInvariant j = j_invariant(ModularContext(kClassNumberOneD[i]));
    ASSERT_TRUE(j.gamma2) << kClassNumberOneD[i];
    EXPECT_EQ(*j.gamma2, expected_gamma2[i]);
    EXPECT_EQ(j.j, Integer(expected_gamma2[i]) * expected_gamma2[i] * expected_gamma2[i]);
  }
}

TEST(ModularTest, TowersVerifyForAllSixD) {
  for (long d : kClassNumberOneD) {
    const ModularContext ctx(d);
    const TowerReport rep = verify_tower(ctx, *published_tower_labels(d));
    EXPECT_TRUE(rep.all_passed()) << d;
    EXPECT_TRUE(rep.pair_matches_labels) << d;
    EXPECT_EQ(rep.residuals.size(), d % 3 == 0 ? 4u : 6u) << d;
    for (const auto &[key, r] : rep.residuals) EXPECT_TRUE(r.passed) << d << " " << key;
  }
}

TEST(ModularTest, TowerFailsWithWrongLabels) {
  TowerLabels wrong = *published_tower_labels(163);
  wrong.b3 += 1;
  const TowerReport rep = verify_tower(ModularContext(163), wrong);
  EXPECT_FALSE(rep.all_passed());
  EXPECT_FALSE(rep.pair_matches_labels);
  EXPECT_FALSE(rep.residuals.at("W").passed);
}

TEST(ModularTest, ResidualsShrinkWithPrecision) {
  const int p = default_precision(163);
  const TowerLabels labels = *published_tower_labels(163);
  const TowerReport lo = verify_tower(ModularContext(163, p), labels);
  const TowerReport hi = verify_tower(ModularContext(163, 2 * p), labels);
  for (const auto &[key, r] : lo.residuals) {
    const Rational lo_bound = Rational(r.value.magnitude_bound_ulps(), Integer(1) << p);
    const FixedReal &hv = hi.residuals.at(key).value;
    const Rational hi_bound = Rational(hv.magnitude_bound_ulps(), Integer(1) << (2 * p));
    EXPECT_GE(lo_bound, hi_bound * Rational(Integer(1) << (p / 2 - 4))) << key;
  }
}

TEST(ModularTest, WeberProductSelftest) {
  for (int bits : {64, 128, 256}) {
    const FixedReal r = weber_product_selftest(bits);
    EXPECT_TRUE(r.certainly_below_pow2(-(bits - 8))) << bits;
  }
}

}  // namespace
}  // namespace k3atlas
