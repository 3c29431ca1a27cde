#include "nctorus/quadnum.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace nctorus;

namespace {

// Extended-precision values frozen from an independent 25-digit evaluation.
constexpr double kFiveRootFiveOverTen = 0.7236067977499789696409174;
constexpr double kRootThreeOverSix = 0.2886751345948128822545744;

double ulp(double x) { return std::fabs(std::nextafter(x, HUGE_VAL) - x); }

QuadNum qn(long p, long q, long m, long d) { return QuadNum::make(p, q, m, d); }

}  // namespace

TEST(SquarefreeDecompose, Examples) {
  auto s = squarefree_decompose(5);
  EXPECT_EQ(s.f, 1);
  EXPECT_EQ(s.D, 5);
  s = squarefree_decompose(12);
  EXPECT_EQ(s.f, 2);
  EXPECT_EQ(s.D, 3);
  s = squarefree_decompose(1);
  EXPECT_EQ(s.f, 1);
  EXPECT_EQ(s.D, 1);
}

TEST(SquarefreeDecompose, RejectsNonPositive) {
  EXPECT_THROW(squarefree_decompose(0), std::invalid_argument);
  EXPECT_THROW(squarefree_decompose(-8), std::invalid_argument);
}

TEST(SquarefreeDecompose, AgreesWithSearchOracle) {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const auto [f, d] = oracle::squarefree_by_search(n);
    const auto s = squarefree_decompose(BigInt(static_cast<unsigned long>(n)));
    ASSERT_EQ(s.f, BigInt(static_cast<unsigned long>(f))) << n;
    ASSERT_EQ(s.D, BigInt(static_cast<unsigned long>(d))) << n;
  }
}

TEST(SquarefreeDecompose, LargePrimeCofactor) {
  // p is a prime beyond the trial-division cutoff.
  const BigInt p("1000000000039");
  const auto s = squarefree_decompose(BigInt(4) * p);
  EXPECT_EQ(s.f, 2);
  EXPECT_EQ(s.D, p);
  const auto t = squarefree_decompose(p * p * 3);
  EXPECT_EQ(t.f, p);
  EXPECT_EQ(t.D, 3);
}

TEST(QuadNum, NormalizationIsSyntactic) {
  EXPECT_EQ(QuadNum::rational(6, 3), QuadNum(2));
  EXPECT_EQ(qn(10, 2, 20, 5), qn(5, 1, 10, 5));
  EXPECT_EQ(qn(-5, -1, -10, 5), qn(5, 1, 10, 5));
  EXPECT_EQ(qn(0, 2, 1, 12), qn(0, 4, 1, 3));  // 2√12 = 4√3
  EXPECT_EQ(qn(3, 2, 1, 4), QuadNum(7));       // √4 folds into p
  EXPECT_TRUE(qn(7, 0, 2, 5).is_rational());
  EXPECT_EQ(qn(7, 0, 2, 5), QuadNum::rational(7, 2));
  const QuadNum x = qn(10, 4, 6, 5);
  EXPECT_EQ(x.p(), 5);
  EXPECT_EQ(x.q(), 2);
  EXPECT_EQ(x.m(), 3);
  EXPECT_EQ(x.D(), 5);
}

TEST(QuadNum, ArithmeticExamples) {
  const QuadNum phi = qn(1, 1, 2, 5);
  const QuadNum psi = qn(1, -1, 2, 5);
  EXPECT_EQ(phi * psi, QuadNum(-1));
  EXPECT_EQ(phi + QuadNum(), phi);
  EXPECT_EQ(qn(5, 1, 10, 5) + qn(5, -1, 10, 5), QuadNum(1));
  EXPECT_EQ(phi - phi, QuadNum());
  EXPECT_EQ(-phi, qn(-1, -1, 2, 5));
  EXPECT_EQ(QuadNum(1) / phi, qn(-1, 1, 2, 5));
}

TEST(QuadNum, Errors) {
  EXPECT_THROW(QuadNum::sqrt(5) + QuadNum::sqrt(3), FieldMismatch);
  EXPECT_THROW(QuadNum::sqrt(5) * QuadNum::sqrt(2), FieldMismatch);
  EXPECT_THROW(QuadNum(1) / QuadNum(), std::domain_error);
  EXPECT_THROW((void)compare(QuadNum::sqrt(5), QuadNum::sqrt(3)), FieldMismatch);
  // Rationals mix with any field.
  EXPECT_NO_THROW(QuadNum::sqrt(5) + QuadNum::rational(1, 3));
  EXPECT_NO_THROW(QuadNum::sqrt(3) * QuadNum(7));
}

TEST(QuadNum, CompareExamples) {
  const QuadNum phi = qn(1, 1, 2, 5);
  EXPECT_EQ(compare(phi, QuadNum(1)), std::strong_ordering::greater);
  EXPECT_EQ(compare(phi, phi), std::strong_ordering::equal);
  EXPECT_EQ(compare(qn(1, -1, 2, 5), QuadNum()), std::strong_ordering::less);
  EXPECT_LT(qn(3, -1, 1, 3), QuadNum(2));  // 3 - √3 < 2
  EXPECT_LT(qn(-7, 3, 1, 5), QuadNum());   // 3√5 < 7
  EXPECT_GT(qn(-6, 3, 1, 5), QuadNum());
  EXPECT_LT(qn(-7, 3, 1, 6), QuadNum(1));  // 3√6 ≈ 7.35 < 8
}

TEST(QuadNum, IsInteger) {
  EXPECT_TRUE(is_integer(QuadNum(3)));
  EXPECT_FALSE(is_integer(qn(5, 1, 10, 5)));
  EXPECT_TRUE(is_integer(QuadNum::rational(6, 3)));
  EXPECT_FALSE(is_integer(QuadNum::rational(7, 2)));
}

TEST(QuadNum, ModOneExamples) {
  EXPECT_EQ(mod_one(QuadNum::rational(7, 2)), QuadNum::rational(1, 2));
  EXPECT_EQ(mod_one(qn(5, 1, 10, 5)), qn(5, 1, 10, 5));
  EXPECT_EQ(mod_one(qn(0, -1, 5, 5)), qn(5, -1, 5, 5));
  EXPECT_EQ(mod_one(QuadNum(-3)), QuadNum());
  EXPECT_EQ(floor(qn(0, -1, 5, 5)), -1);
  EXPECT_EQ(floor(qn(-7, 3, 1, 5)), -1);
  EXPECT_EQ(floor(qn(-6, 3, 1, 5)), 0);
}

TEST(QuadNum, ToDoubleAgainstFrozenValues) {
  EXPECT_EQ(to_double(QuadNum::rational(1, 2)), 0.5);
  EXPECT_LE(std::fabs(to_double(qn(5, 1, 10, 5)) - kFiveRootFiveOverTen), 4 * ulp(kFiveRootFiveOverTen));
  EXPECT_LE(std::fabs(to_double(qn(0, 1, 6, 3)) - kRootThreeOverSix), 4 * ulp(kRootThreeOverSix));
}

TEST(QuadNum, ToDoubleOverflowSignals) {
  BigInt huge = 1;
  huge <<= 2000;
  EXPECT_THROW(to_double(QuadNum(huge)), std::overflow_error);
}

TEST(QuadNum, TextGrammar) {
  EXPECT_EQ(to_string(qn(5, 1, 10, 5)), "(5+1\xE2\x88\x9A" "5)/10");
  EXPECT_EQ(to_string(QuadNum(3)), "3");
  EXPECT_EQ(to_string(qn(0, 1, 6, 3)), "(0+1\xE2\x88\x9A" "3)/6");
  EXPECT_EQ(to_string(qn(5, -1, 10, 5)), "(5-1\xE2\x88\x9A" "5)/10");
  EXPECT_EQ(to_string(qn(2, 3, 1, 7)), "(2+3\xE2\x88\x9A" "7)");
  EXPECT_EQ(to_string(QuadNum::rational(-1, 2)), "-1/2");
  EXPECT_EQ(to_string(qn(5, 1, 10, 5), Glyph::Ascii), "(5+1sqrt(5))/10");
}

TEST(QuadNum, ParserRoundTrip) {
  for (const QuadNum& x : {qn(5, 1, 10, 5), QuadNum(3), qn(0, 1, 6, 3), qn(5, -1, 10, 5), QuadNum::rational(-1, 2),
                           qn(-17, 4, 3, 11), qn(2, 3, 1, 7)}) {
    EXPECT_EQ(parse_quadnum(to_string(x)), x);
    EXPECT_EQ(parse_quadnum(to_string(x, Glyph::Ascii)), x);
  }
  EXPECT_EQ(parse_quadnum("(0+2\xE2\x88\x9A" "12)/4"), qn(0, 1, 1, 3));
  EXPECT_THROW(parse_quadnum("(1+2"), std::invalid_argument);
  EXPECT_THROW(parse_quadnum("abc"), std::invalid_argument);
  EXPECT_THROW(parse_quadnum("1/0"), std::exception);
}

class FieldAxioms : public ::testing::Test {
 protected:
  QuadNum sample(long d) {
    auto r = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    return qn(r(-50, 50), r(-50, 50), r(1, 30), d);
  }
  std::mt19937_64 rng{20261019};
};

TEST_F(FieldAxioms, RandomSamples) {
  for (long d : {2L, 3L, 5L, 13L}) {
    for (int i = 0; i < 300; ++i) {
      const QuadNum x = sample(d), y = sample(d), z = sample(d);
      ASSERT_EQ((x + y) + z, x + (y + z));
      ASSERT_EQ((x * y) * z, x * (y * z));
      ASSERT_EQ(x + y, y + x);
      ASSERT_EQ(x * y, y * x);
      ASSERT_EQ(x * (y + z), x * y + x * z);
      ASSERT_EQ(x - x, QuadNum());
      if (!x.is_zero()) ASSERT_EQ(x * (QuadNum(1) / x), QuadNum(1));
    }
  }
}

TEST_F(FieldAxioms, ModOneAndFloorProperties) {
  for (int i = 0; i < 2000; ++i) {
    const QuadNum x = sample(i % 2 ? 5 : 7);
    const QuadNum r = mod_one(x);
    ASSERT_TRUE(is_integer(x - r));
    ASSERT_GE(r, QuadNum());
    ASSERT_LT(r, QuadNum(1));
    ASSERT_EQ(QuadNum(floor(x)) + r, x);
  }
}

TEST_F(FieldAxioms, CompareMatchesFloatSign) {
  for (int i = 0; i < 2000; ++i) {
    const QuadNum x = sample(3), y = sample(3);
    const double diff = to_double(x) - to_double(y);
    if (std::fabs(diff) <= 1e-9) continue;
    ASSERT_EQ(compare(x, y) == std::strong_ordering::greater, diff > 0) << to_string(x) << " vs " << to_string(y);
  }
}

TEST_F(FieldAxioms, ToDoubleWithinFourUlp) {
  // (p + q√D)/m versus long double evaluation, which carries 11 spare bits.
  for (int i = 0; i < 2000; ++i) {
    const QuadNum x = sample(i % 3 == 0 ? 2 : 11);
    const long double ref = (x.p().get_d() + x.q().get_d() * std::sqrt(static_cast<long double>(x.D().get_d()))) /
                            x.m().get_d();
    const double got = to_double(x);
    // Cancellation makes the long double reference itself inexact near 0.
    if (std::fabs(static_cast<double>(ref)) < 1e-6) continue;
    ASSERT_LE(std::fabs(static_cast<long double>(got) - ref), 4 * ulp(got)) << to_string(x);
  }
}
