#include <gtest/gtest.h>

#include <random>
#include <set>

#include "k3atlas/maps.hpp"
#include "oracles.hpp"

namespace k3atlas {
namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }
AbstractPair pr(Rational a, Rational b) { return {std::move(a), std::move(b)}; }
RatPoint pt(Rational u, Rational v) { return {std::move(u), std::move(v)}; }

TEST(MapsTest, CoverK3ToK6) {
  EXPECT_EQ(cover_k3_to_k6(pr(3, 6)), pr(3, 6));
  EXPECT_EQ(cover_k3_to_k6(pr(-17, 150)), pr(139, 11318));
  EXPECT_EQ(cover_k3_to_k6(pr(7, 26)), pr(23, 310));
}

TEST(MapsTest, PellParams) {
  auto check = [](AbstractPair a2b2, long k, long u, long v) {
    const PellParams pp = pell_params(a2b2);
    EXPECT_TRUE(pp.on_k6);
    ASSERT_TRUE(pp.triple.has_value());
    EXPECT_EQ(pp.triple->k, q(k));
    EXPECT_EQ(pp.triple->u, q(u));
    EXPECT_EQ(pp.triple->v, q(v));
    EXPECT_EQ(pp.triple->pell_value(), q(1));
  };
  check(pr(139, 11318), 82, -99, 70);
  check(pr(23, 310), 14, -17, 12);
  check(pr(-1, 6), -2, -1, 0);
}

TEST(MapsTest, PellParamsAtA2EqualOne) {
  // G(1, b2) = (b2 - 2)^2, so (1, 2) is on K6 with no k.
  const PellParams pp = pell_params(pr(1, 2));
  EXPECT_TRUE(pp.on_k6);
  EXPECT_FALSE(pp.triple.has_value());
  EXPECT_FALSE(pell_params(pr(1, 5)).on_k6);
}

TEST(MapsTest, EulerResolventIsAnIdentity) {
  EXPECT_TRUE(euler_resolvent_check(pr(3, 6)));
  EXPECT_TRUE(euler_resolvent_check(pr(1, 1)));
  EXPECT_TRUE(euler_resolvent_check(pr(-17, 150)));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i)
    EXPECT_TRUE(euler_resolvent_check(pr(testing::random_rational(rng, 500), testing::random_rational(rng, 500))));
}

TEST(MapsTest, CoverK1ToK2) {
  EXPECT_EQ(cover_k1_to_k2(pr(2, 6)), pt(-2, 6));
  EXPECT_EQ(cover_k1_to_k2(pr(0, 0)), pt(0, 0));
  EXPECT_EQ(cover_k1_to_k2(pr(1, 2)), pt(-1, -2));
  for (const auto &r : published_points(CurveId::K1))
    EXPECT_TRUE(is_on_curve(CurveId::K2, cover_k1_to_k2(as_pair(r.pt)))) << to_string(r.pt);
}

TEST(MapsTest, K1ToK3MatchesLabels) {
  EXPECT_EQ(k1_to_k3(pr(0, 0)), pr(3, 6));
  EXPECT_EQ(k1_to_k3(pr(2, 6)), pr(-17, 150));
  EXPECT_EQ(k1_to_k3(pr(-1, 2)), pr(7, 26));
  for (const auto &r1 : published_points(CurveId::K1)) {
    const AbstractPair img = k1_to_k3(as_pair(r1.pt));
    bool matched = false;
    for (const auto &r3 : published_points(CurveId::K3))
      if (r3.pt == as_point(img)) matched = r3.d == r1.d;
    EXPECT_TRUE(matched) << to_string(r1.pt);
  }
}

TEST(MapsTest, K2ToK6OnParameterPairs) {
  EXPECT_EQ(k2_to_k6(pr(-2, 14)), pr(139, 11318));
  EXPECT_EQ(k2_to_k6(pr(0, 0)), pr(3, 6));
  EXPECT_EQ(k2_to_k6(pr(-1, 0)), pr(-1, 6));
}

TEST(MapsTest, CommutingSquare) {
  EXPECT_EQ(cover_k3_to_k6(k1_to_k3(pr(1, 1))), pr(3, q(-15, 2)));
  EXPECT_EQ(k2_to_k6(k1_params_to_k2_params(pr(1, 1))), pr(3, q(-15, 2)));
  std::mt19937_64 rng(19);
  for (int i = 0; i < 500; ++i) {
    const AbstractPair p = pr(testing::random_rational(rng, 1000), testing::random_rational(rng, 1000));
    EXPECT_EQ(cover_k3_to_k6(k1_to_k3(p)), k2_to_k6(k1_params_to_k2_params(p)));
  }
}

TEST(MapsTest, K1ToKs) {
  EXPECT_EQ(k1_to_ks(pr(2, 6)), pt(q(1, 2), q(7, 4)));
  EXPECT_EQ(k1_to_ks(pr(1, 2)), pt(1, -4));
  try {
    k1_to_ks(pr(0, 0));
    FAIL() << "expected MapDomainError";
  } catch (const MapDomainError &e) {
    EXPECT_TRUE(e.involves("alpha3"));
  }
  for (const auto &r : published_points(CurveId::K1)) {
    if (r.pt.u.is_zero()) continue;
    EXPECT_TRUE(is_on_curve(CurveId::Ks, k1_to_ks(as_pair(r.pt)))) << to_string(r.pt);
  }
}

TEST(MapsTest, KsToK3Examples) {
  EXPECT_EQ(ks_to_k3(pt(1, 4)), pt(7, 26));
  EXPECT_EQ(ks_to_k3(pt(2, -14)), pt(q(-9, 17), q(6, 289)));
  EXPECT_EQ(ks_to_k3(pt(q(1, 2), q(-7, 4))), pt(q(-155, 79), q(42486, 6241)));
}

TEST(MapsTest, KsToK3DenominatorHasNoRationalZero) {
  // Monic with constant term 1: only +-1 can be rational roots. Its roots
  // have degree 4, so the domain error is unreachable over Q and over real
  // quadratic fields.
  const BivarPoly &den = birational_polys().den;
  EXPECT_FALSE(den.eval(q(1), q(0)).is_zero());
  EXPECT_FALSE(den.eval(q(-1), q(0)).is_zero());
}

TEST(MapsTest, K3ToKsExamplesAndErrors) {
  EXPECT_EQ(k3_to_ks(pt(7, 26)), pt(1, 4));
  try {
    k3_to_ks(pt(1, 2));
    FAIL() << "expected MapDomainError";
  } catch (const MapDomainError &e) {
    EXPECT_TRUE(e.involves("x-1"));
  }
  try {
    k3_to_ks(pt(-1, -2));
    FAIL() << "expected MapDomainError";
  } catch (const MapDomainError &e) {
    EXPECT_TRUE(e.involves(std::string(kK3ZDenominator)));
  }
}

TEST(MapsTest, PrintedInverseDegeneratesAtTwoPoints) {
  // The printed w-denominator vanishes at (1,6) (x - 1) and (-1,2) (x + 1).
  for (auto [p, factor] : {std::pair{pt(1, 6), "x-1"}, std::pair{pt(-1, 2), "x+1"}}) {
    try {
      k3_to_ks_printed(p);
      FAIL() << "expected MapDomainError at " << to_string(p);
    } catch (const MapDomainError &e) {
      EXPECT_TRUE(e.involves(factor));
      EXPECT_FALSE(e.involves(std::string(kK3ZDenominator)));
    }
  }
  EXPECT_EQ(k3_to_ks(pt(1, 6)), pt(-1, -4));
  EXPECT_EQ(k3_to_ks(pt(-1, 2)), pt(1, -4));
}

TEST(MapsTest, BirationalRoundTripOnPublishedPoints) {
  std::set<RatPoint> images;
  for (const auto &r : published_points(CurveId::Ks)) {
    const RatPoint img = ks_to_k3(r.pt);
    EXPECT_TRUE(is_on_curve(CurveId::K3, img));
    EXPECT_EQ(k3_to_ks(img), r.pt);
    images.insert(img);
  }
  std::set<RatPoint> expected;
  for (const auto &r : published_points(CurveId::K3))
    if (r.pt != pt(1, 2) && r.pt != pt(-1, -2)) expected.insert(r.pt);
  EXPECT_EQ(images, expected);
  for (const RatPoint &p : expected) EXPECT_TRUE(is_on_curve(CurveId::Ks, k3_to_ks(p)));
}

TEST(MapsTest, PellInvariantOnK3Table) {
  for (const auto &r : published_points(CurveId::K3)) {
    const PellParams pp = pell_params(cover_k3_to_k6(as_pair(r.pt)));
    EXPECT_TRUE(pp.on_k6) << to_string(r.pt);
    ASSERT_TRUE(pp.triple.has_value());
    EXPECT_EQ(pp.triple->pell_value(), q(1));
  }
}

TEST(MapsTest, OffCurveInputsAreAccepted) {
  const RatPoint img = ks_to_k3(pt(3, 5));
  EXPECT_FALSE(is_on_curve(CurveId::K3, img));
}

}  // namespace
}  // namespace k3atlas
