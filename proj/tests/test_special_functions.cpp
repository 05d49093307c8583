#include <gtest/gtest.h>

#include <cmath>

#include "gbswitch/special_functions.hpp"

using namespace gbswitch::special;

TEST(SpecialFunctions, LogGammaAgainstStd) {
  for (double x = 0.01; x < 200.0; x *= 1.07) {
    const double expect = std::lgamma(x);
    EXPECT_NEAR(log_gamma(x), expect, 1e-13 * std::max(1.0, std::abs(expect))) << x;
  }
  EXPECT_NEAR(gbswitch::special::gamma(0.5), std::sqrt(M_PI), 1e-14);
  EXPECT_NEAR(gbswitch::special::gamma(5.0), 24.0, 1e-12);
  EXPECT_NEAR(gbswitch::special::gamma(1.5), std::sqrt(M_PI) / 2, 1e-15);
}

TEST(SpecialFunctions, DigammaKnownValues) {
  EXPECT_NEAR(digamma(1.0), -kEulerGamma, 1e-14);
  EXPECT_NEAR(digamma(0.5), -kEulerGamma - 2 * std::log(2.0), 1e-14);
  // ψ(x+1) − ψ(x) = 1/x
  for (double x = 0.1; x < 50; x += 0.37) {
    EXPECT_NEAR(digamma(x + 1) - digamma(x), 1 / x, 1e-12 * std::max(1.0, 1 / x)) << x;
  }
  // Central difference of lnΓ.
  for (double x : {0.7, 1.3, 2.9, 7.5, 31.0}) {
    const double h = 1e-5;
    EXPECT_NEAR(digamma(x), (std::lgamma(x + h) - std::lgamma(x - h)) / (2 * h), 1e-8) << x;
  }
}

// ψ(m+1) = H_m − γ for integers.
TEST(SpecialFunctions, DigammaMatchesHarmonicNumbers) {
  long double direct = 0;
  for (int m = 1; m <= 10000; ++m) {
    direct += 1.0L / m;
    ASSERT_NEAR(harmonic(m), static_cast<double>(direct), 1e-13 * static_cast<double>(direct));
    ASSERT_NEAR(digamma(m + 1.0), static_cast<double>(direct) - kEulerGamma, 1e-12) << m;
  }
  EXPECT_EQ(harmonic(0), 0.0);
}
