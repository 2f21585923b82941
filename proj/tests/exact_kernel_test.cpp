#include <gtest/gtest.h>

#include <random>

#include "k3atlas/bivar_poly.hpp"
#include "k3atlas/curves.hpp"
#include "k3atlas/errors.hpp"
#include "k3atlas/quad_rat.hpp"
#include "k3atlas/rational.hpp"
#include "oracles.hpp"

namespace k3atlas {
namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

TEST(RationalTest, FractionArithmetic) {
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
  EXPECT_EQ(q(-9, 17) * q(17, 9), q(-1));
  EXPECT_EQ(q(1, 2) - q(1, 2), q(0));
  EXPECT_EQ(q(3, 4) / q(-3, 8), q(-2));
}

TEST(RationalTest, DivisionByZeroIsDistinct) {
  EXPECT_THROW(q(1, 2) / q(0), DivisionByZero);
  EXPECT_THROW(Rational(Integer(1), Integer(0)), DivisionByZero);
  EXPECT_THROW(q(0).reciprocal(), DivisionByZero);
}

TEST(RationalTest, CanonicalForm) {
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(Integer(0), Integer(-7)).den(), 1);
  EXPECT_EQ(Rational::parse("-10/4"), q(-5, 2));
  EXPECT_EQ(Rational::parse("42486/6241").to_string(), "42486/6241");
  EXPECT_EQ(Rational::parse("12").to_string(), "12");
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(RationalTest, RoundAndFloor) {
  EXPECT_EQ(q(7, 2).round(), 4);
  EXPECT_EQ(q(-7, 2).round(), -4);
  EXPECT_EQ(q(-7, 2).floor(), -4);
  EXPECT_EQ(q(5, 3).round(), 2);
}

TEST(RationalTest, ReciprocalAndNormalizationProperties) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Rational x = testing::random_rational(rng, 1'000'000);
    const Rational rebuilt(x.num() * 3, x.den() * 3);
    EXPECT_EQ(rebuilt, x);
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.reciprocal(), q(1));
    }
  }
}

TEST(RationalSqrtTest, Examples) {
  // 2z(z^4 + 4z^3 - 2z^2 + 4z + 1) at z = 1/2 is 49/16.
  const Rational z = q(1, 2);
  const Rational r = Rational(2) * z * (z.pow(4) + Rational(4) * z.pow(3) - Rational(2) * z * z +
                                        Rational(4) * z + Rational(1));
  ASSERT_EQ(r, q(49, 16));
  EXPECT_EQ(rational_sqrt(r), q(7, 4));
  EXPECT_EQ(rational_sqrt(q(0)), q(0));
  EXPECT_FALSE(rational_sqrt(q(2)).has_value());
  EXPECT_FALSE(rational_sqrt(q(-4)).has_value());
  EXPECT_FALSE(rational_sqrt(q(4, 3)).has_value());
}

TEST(RationalSqrtTest, SquaresOfRandomRationals) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Rational x = testing::random_rational(rng, 1'000'000);
    EXPECT_EQ(rational_sqrt(x * x), x.abs());
  }
}

TEST(SquarefreeTest, Split) {
  auto s = squarefree_split(Integer(72));  // 2 * 6^2
  EXPECT_EQ(s.core, 2);
  EXPECT_EQ(s.root, 6);
  s = squarefree_split(Integer(1000003) * 1000003 * 17);
  EXPECT_EQ(s.core, 17);
  EXPECT_EQ(s.root, 1000003);
  EXPECT_TRUE(is_squarefree(Integer(89)));
  EXPECT_FALSE(is_squarefree(Integer(163 * 163)));
}

QuadRat qr(long m, Rational a, Rational b) { return QuadRat(Integer(m), std::move(a), std::move(b)); }

TEST(QuadRatTest, Examples) {
  EXPECT_EQ(qr(17, 8, 2) * qr(17, 8, -2), qr(17, -4, 0));
  EXPECT_EQ(qr(41, 4, 1) + qr(41, -4, 0), qr(41, 0, 1));
  EXPECT_EQ(qr(17, 1, 1) / qr(17, 1, 1), qr(17, 1, 0));
  EXPECT_EQ(qr(17, 8, 2).norm(), q(-4));
}

TEST(QuadRatTest, Errors) {
  EXPECT_THROW(qr(17, 1, 1) + qr(41, 1, 1), MixedRadicand);
  EXPECT_THROW(qr(17, 1, 1) * qr(41, 1, 1), MixedRadicand);
  EXPECT_THROW(qr(17, 1, 1) / qr(17, 0, 0), DivisionByZero);
  EXPECT_THROW(qr(18, 1, 1), std::invalid_argument);
  EXPECT_THROW(qr(1, 1, 1), std::invalid_argument);
}

TEST(QuadRatTest, ConjugationAndNormAreMultiplicative) {
  std::mt19937_64 rng(3);
  for (long m : {2L, 17L, 41L, 89L}) {
    for (int i = 0; i < 200; ++i) {
      const QuadRat u = qr(m, testing::random_rational(rng, 1000), testing::random_rational(rng, 1000));
      const QuadRat v = qr(m, testing::random_rational(rng, 1000), testing::random_rational(rng, 1000));
      EXPECT_EQ((u * v).conj(), u.conj() * v.conj());
      EXPECT_EQ((u * v).norm(), u.norm() * v.norm());
    }
  }
}

TEST(BivarPolyTest, ParseAndPrint) {
  const BivarPoly k2 = BivarPoly::parse("y^2 - 2x^4 + 2x");
  EXPECT_EQ(k2, defining_poly(CurveId::K2));
  EXPECT_EQ(k2.to_string(), "-2x^4 + y^2 + 2x");
  EXPECT_EQ(BivarPoly::parse("3 x*y^2 - x y^2 - 2x y^2").size(), 0u);
  EXPECT_THROW(BivarPoly::parse("2x +"), std::invalid_argument);
  EXPECT_THROW(BivarPoly::parse("2q"), std::invalid_argument);
}

TEST(BivarPolyTest, EvalExamples) {
  EXPECT_EQ(defining_poly(CurveId::K2).eval(q(0), q(0)), q(0));
  EXPECT_EQ(defining_poly(CurveId::K3).eval(q(0), q(0)), q(-24));
  const QuadRat x = qr(17, -1, 0);
  const QuadRat y = qr(17, 8, 2);
  EXPECT_TRUE(defining_poly(CurveId::K3).eval(x, y).is_zero());
}

TEST(BivarPolyTest, HornerMatchesNaiveSum) {
  std::mt19937_64 rng(5);
  const BivarPoly &k1 = defining_poly(CurveId::K1);
  for (int i = 0; i < 50; ++i) {
    const Rational x = testing::random_rational(rng, 50);
    const Rational y = testing::random_rational(rng, 50);
    Rational naive;
    for (const auto &[e, c] : k1.terms()) naive += Rational(c) * x.pow(e.first) * y.pow(e.second);
    EXPECT_EQ(k1.eval(x, y), naive);
  }
}

TEST(BivarPolyTest, QuadEvalCommutesWithConjugation) {
  std::mt19937_64 rng(9);
  for (CurveId c : kAllCurves) {
    for (int i = 0; i < 30; ++i) {
      const QuadRat x = qr(41, testing::random_rational(rng, 30), testing::random_rational(rng, 30));
      const QuadRat y = qr(41, testing::random_rational(rng, 30), testing::random_rational(rng, 30));
      EXPECT_EQ(defining_poly(c).eval(x.conj(), y.conj()), defining_poly(c).eval(x, y).conj());
    }
  }
}

TEST(BivarPolyTest, MixedRadicandEvaluationThrows) {
  EXPECT_THROW(defining_poly(CurveId::K3).eval(qr(17, 1, 1), qr(41, 1, 1)), MixedRadicand);
}

TEST(IntegerRootsTest, FindsAllIntegerRoots) {
  // (t - 3)^2 (t + 5)(t^2 + 1)
  const UniPoly p = {{5, 1}, {4, -1}, {3, -20}, {2, 44}, {1, -21}, {0, 45}};
  EXPECT_EQ(integer_roots(p), (std::vector<Integer>{-5, 3}));
  // t^4 - 2: no integer roots
  EXPECT_TRUE(integer_roots(UniPoly{{4, 1}, {0, -2}}).empty());
  // t (t - 1000000)
  EXPECT_EQ(integer_roots(UniPoly{{2, 1}, {1, -1000000}}), (std::vector<Integer>{0, 1000000}));
}

TEST(IntegerRootsTest, MatchesBruteForceOnRandomQuartics) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> root(-40, 40), coef(-5, 5);
  for (int i = 0; i < 200; ++i) {
    // (t - r1)(t - r2)(t^2 + c1 t + c0): roots r1, r2 plus whatever the quadratic adds.
    const long r1 = root(rng), r2 = root(rng), c1 = coef(rng), c0 = coef(rng);
    const BivarPoly t = BivarPoly::y_var();
    const BivarPoly poly = (t - BivarPoly::constant(r1)) * (t - BivarPoly::constant(r2)) *
                           (t * t + BivarPoly::constant(c1) * t + BivarPoly::constant(c0));
    const UniPoly up = poly.specialize_x(Integer(0));
    std::vector<Integer> brute;
    for (long v = -200; v <= 200; ++v)
      if (sgn(eval_uni(up, Integer(v))) == 0) brute.push_back(v);
    EXPECT_EQ(integer_roots(up), brute);
  }
}

}  // namespace
}  // namespace k3atlas

namespace k3atlas {
namespace {

TEST(QuadRatTest, Formatting) {
  const Integer m(89);
  EXPECT_EQ(QuadRat(m, -10, -1).to_string(), "-10 - sqrt(89)");
  EXPECT_EQ(QuadRat(m, 310, 32).to_string(), "310 + 32*sqrt(89)");
  EXPECT_EQ(QuadRat(m, 0, Rational(Integer(-3), Integer(2))).to_string(), "-3/2*sqrt(89)");
  EXPECT_EQ(QuadRat(m, -1, 0).to_string(), "-1");
  EXPECT_EQ(QuadRat(m, 0, 0).to_string(), "0");
}

}  // namespace
}  // namespace k3atlas
