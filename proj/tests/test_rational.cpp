#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "gbswitch/error.hpp"
#include "gbswitch/rational.hpp"

using gbswitch::Error;
using gbswitch::ErrorKind;
using gbswitch::Exponent;
using gbswitch::Rational;

TEST(Rational, NormalizesAndCompares) {
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational(6, -4).den(), 2);
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 3), Rational(1, 2));
  EXPECT_EQ(Rational(1) - Rational(3, 2), Rational(-1, 2));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, Overflow) {
  const Rational big(std::int64_t{1} << 62);
  EXPECT_THROW(big * big, std::overflow_error);
  // Large intermediates that reduce back are fine.
  EXPECT_EQ(Rational(std::int64_t{1} << 62, 3) * Rational(3, std::int64_t{1} << 62), Rational(1));
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("4/3"), Rational(4, 3));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("2.75"), Rational(11, 4));
  EXPECT_EQ(Rational::parse("-.5"), Rational(-1, 2));
  EXPECT_EQ(Rational(4, 3).str(), "4/3");
  EXPECT_EQ(Rational(-2).str(), "-2");
  for (const char* bad : {"", "1e-3", "x", "1/0", "1/", "1.2.3", "--1"}) {
    try {
      (void)Rational::parse(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
}

TEST(Rational, FieldAxiomsOnRandomGrid) {
  std::mt19937_64 rng(1);
  auto draw = [&] {
    return Rational(static_cast<std::int64_t>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 19) + 1);
  };
  for (int i = 0; i < 2000; ++i) {
    const Rational a = draw();
    const Rational b = draw();
    const Rational c = draw();
    ASSERT_EQ((a + b) * c, a * c + b * c);
    ASSERT_EQ(a - b + b, a);
    if (b.sign() != 0) {
      ASSERT_EQ(a / b * b, a);
    }
    ASSERT_NEAR((a + b).to_double(), a.to_double() + b.to_double(), 1e-12);
  }
}

TEST(Exponent, InfinityAndParse) {
  EXPECT_TRUE(Exponent::parse("inf").is_infinite());
  EXPECT_TRUE(Exponent::parse("infinity").is_infinite());
  EXPECT_TRUE(Exponent::parse("∞").is_infinite());
  EXPECT_EQ(Exponent::parse("3/2"), Exponent(Rational(3, 2)));
  EXPECT_GT(Exponent::infinity(), Exponent(1000000));
  EXPECT_EQ(Exponent::infinity(), Exponent::infinity());
  EXPECT_EQ(Exponent::infinity().str(), "inf");
  EXPECT_EQ(Exponent::infinity().to_double(), std::numeric_limits<double>::infinity());
  EXPECT_THROW((void)Exponent::infinity().value(), std::logic_error);
}
