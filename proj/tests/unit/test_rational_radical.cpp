#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "calg2/radical.hpp"
#include "calg2/rational.hpp"

using namespace calg2;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
  EXPECT_EQ(parse_rational("+1/2"), make_rational(1, 2));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational("--2"), std::invalid_argument);
}

TEST(Radical, SqrtPullsOutSquareFactors) {
  EXPECT_EQ(Radical::sqrt_of(12), Radical(2) * Radical::sqrt_of(3));
  EXPECT_EQ(Radical::sqrt_of(49), Radical(7));
  EXPECT_TRUE(Radical::sqrt_of(0).is_zero());
}

TEST(Radical, ProductsOfSquareRootsCombine) {
  EXPECT_EQ(Radical::sqrt_of(2) * Radical::sqrt_of(3), Radical::sqrt_of(6));
  EXPECT_EQ(Radical::sqrt_of(10) * Radical::sqrt_of(70), Radical(10) * Radical::sqrt_of(7));
  EXPECT_EQ(Radical::sqrt_of(7) * Radical::sqrt_of(7), Radical(7));
  EXPECT_TRUE((Radical::sqrt_of(3) - Radical::sqrt_of(3)).is_zero());
}

TEST(Radical, SignOfNearCancellation) {
  // sqrt2 + sqrt3 - sqrt10 is about -0.0166
  Radical x = Radical::sqrt_of(2) + Radical::sqrt_of(3) - Radical::sqrt_of(10);
  EXPECT_EQ(x.sign(), -1);
  // 5 - 2 sqrt6 is about 0.101
  EXPECT_EQ((Radical(5) - Radical(2) * Radical::sqrt_of(6)).sign(), 1);
  // (sqrt2 + sqrt3)^2 - 5 - 2 sqrt6 is exactly zero
  Radical y = Radical::sqrt_of(2) + Radical::sqrt_of(3);
  EXPECT_TRUE((y * y - Radical(5) - Radical(2) * Radical::sqrt_of(6)).is_zero());
}

TEST(Radical, SignAgreesWithFloatingPointAwayFromZero) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-9, 9);
  const unsigned long radicands[] = {1, 2, 3, 5, 6, 7, 10, 14, 15, 21, 30, 70};
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    Radical x;
    long double approx = 0;
    for (unsigned long d : radicands) {
      int k = c(rng);
      if (k == 0 || rng() % 3) continue;
      x += Radical(k) * Radical::sqrt_of(d);
      approx += k * std::sqrt(static_cast<long double>(d));
    }
    if (std::fabs(approx) < 1e-9L) continue;
    EXPECT_EQ(x.sign(), approx > 0 ? 1 : -1) << x.to_string();
    ++checked;
  }
  EXPECT_GT(checked, 1500);
}

TEST(Radical, RendersCanonically) {
  Radical x = Radical(2) + Radical(make_rational(3, 2)) * Radical::sqrt_of(3) - Radical::sqrt_of(70);
  EXPECT_EQ(x.to_string(), "2+3/2*s3-s70");
  EXPECT_EQ(Radical().to_string(), "0");
}
