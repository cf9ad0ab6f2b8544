#include <gtest/gtest.h>

#include <sstream>

#include "sigcolor/errors.hpp"
#include "sigcolor/rational.hpp"

using sigcolor::Rational;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, 4).str(), "3/2");
  EXPECT_EQ(Rational(3).str(), "3/1");
  EXPECT_EQ(Rational(2, -4).str(), "-1/2");
  EXPECT_EQ(Rational(0, 7).str(), "0/1");
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("10/3"), Rational(10, 3));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-8/6"), Rational(-4, 3));
  EXPECT_THROW(Rational::parse("1/0"), sigcolor::Error);
  EXPECT_THROW(Rational::parse("abc"), sigcolor::Error);
  EXPECT_THROW(Rational::parse(""), sigcolor::Error);
}

TEST(Rational, Arithmetic) {
  const Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 3));
  EXPECT_LT(b, a);
  EXPECT_GT(Rational(10, 3), Rational(3));
}

TEST(Rational, FloorAndMod) {
  EXPECT_EQ(floor(Rational(7, 2)), Rational(3));
  EXPECT_EQ(floor(Rational(-1, 2)), Rational(-1));
  EXPECT_EQ(mod(Rational(10, 3), Rational(3)), Rational(1, 3));
  EXPECT_EQ(mod(Rational(-1, 3), Rational(8, 3)), Rational(7, 3));
  EXPECT_EQ(mod(Rational(8, 3), Rational(8, 3)), Rational(0));
  EXPECT_TRUE(Rational(4).is_integer());
  EXPECT_FALSE(Rational(4, 3).is_integer());
}

TEST(Rational, HugeValuesStayExact) {
  Rational x(1);
  for (int i = 0; i < 200; ++i) x = x * Rational(3, 2);
  for (int i = 0; i < 200; ++i) x = x / Rational(3, 2);
  EXPECT_EQ(x, Rational(1));
}

TEST(Rational, Stream) {
  std::ostringstream out;
  out << Rational(18, 5);
  EXPECT_EQ(out.str(), "18/5");
}
