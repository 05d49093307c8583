#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "gbswitch/error.hpp"
#include "gbswitch/ksz.hpp"
#include "gbswitch/lp_optimizer.hpp"

using namespace gbswitch;
using namespace gbswitch::ksz;

TEST(SampleMinNorm, TwoByTwoMinimumIsTwo) {
  const NormSample s = sample_min_norm(2, 2, Exponent::infinity(), 200, 1);
  EXPECT_EQ(s.min_norm, 2.0);
  EXPECT_TRUE(s.exact);
  EXPECT_EQ(s.samples, 200U);
}

TEST(SampleMinNorm, AllOnesNormIsFull) {
  EXPECT_EQ(operator_norm(SignTensor::all_ones(DimSpec(2, 2)), Exponent::infinity(), {}, 0), 4.0);
  EXPECT_EQ(operator_norm(SignTensor::all_ones(DimSpec(3, 3)), Exponent::infinity(), {}, 0), 27.0);
}

TEST(SampleMinNorm, ReproducibleAcrossWorkerCounts) {
  setenv("GB_THREADS", "1", 1);
  const NormSample a = sample_min_norm(2, 5, Exponent::infinity(), 500, 99);
  setenv("GB_THREADS", "4", 1);
  const NormSample b = sample_min_norm(2, 5, Exponent::infinity(), 500, 99);
  unsetenv("GB_THREADS");
  EXPECT_EQ(a.min_norm, b.min_norm);
  const NormSample c = sample_min_norm(2, 4, Exponent(3), 30, 5);
  const NormSample d = sample_min_norm(2, 4, Exponent(3), 30, 5);
  EXPECT_EQ(c.min_norm, d.min_norm);
  EXPECT_FALSE(c.exact);
}

TEST(SampleMinNorm, WithinTheoreticalRange) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const NormSample s = sample_min_norm(2, n, Exponent::infinity(), 100, 3);
    EXPECT_GE(s.min_norm, g_lower_bound_formula(2, n, Exponent::infinity()));
    EXPECT_LE(s.min_norm, static_cast<double>(n * n));
  }
}

TEST(SampleMinNorm, RunningMinimumOverNestedSamples) {
  double previous = INFINITY;
  for (std::size_t samples : {1, 5, 20, 80}) {
    const double v = sample_min_norm(2, 4, Exponent::infinity(), samples, 12).min_norm;
    EXPECT_LE(v, previous);
    previous = v;
  }
}

TEST(SampleMinNorm, Errors) {
  try {
    (void)sample_min_norm(2, 40, Exponent::infinity(), 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
  EXPECT_THROW((void)sample_min_norm(2, 3, Exponent::infinity(), 0, 0), Error);
}

TEST(FitExponent, Examples) {
  const std::vector<std::pair<double, double>> power{{2, std::pow(2, 1.5)}, {4, std::pow(4, 1.5)}};
  EXPECT_NEAR(fit_exponent(power).slope, 1.5, 1e-14);
  const std::vector<std::pair<double, double>> flat{{2, 3}, {5, 3}, {9, 3}};
  const FitResult f = fit_exponent(flat);
  EXPECT_NEAR(f.slope, 0.0, 1e-15);
  EXPECT_NEAR(std::exp(f.intercept), 3.0, 1e-14);
  EXPECT_NEAR(f.residual, 0.0, 1e-15);
}

TEST(FitExponent, PlantedSlopeWithNoise) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> noise(-0.02, 0.02);
  std::vector<std::pair<double, double>> pts;
  for (double n = 2; n <= 64; n *= 2) pts.emplace_back(n, 3.0 * std::pow(n, 1.5) * std::exp(noise(rng)));
  // Log noise bounded by 0.02 over a log-range of ln 32 moves the slope by
  // at most 2·0.02/ln(32)·(a constant below 2).
  EXPECT_NEAR(fit_exponent(pts).slope, 1.5, 0.03);
}

TEST(FitExponent, Degenerate) {
  const std::vector<std::pair<double, double>> same{{2, 2}, {2, 3}};
  const std::vector<std::pair<double, double>> nonpositive{{2, 0}, {3, 1}};
  for (const auto* pts : {&same, &nonpositive}) {
    try {
      (void)fit_exponent(*pts);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::DegenerateInput);
    }
  }
}

TEST(SharpnessExperiment, DegenerateRange) {
  const std::vector<std::size_t> ns{2, 2};
  try {
    (void)sharpness_experiment(2, Exponent::infinity(), ns, 10, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateInput);
  }
}

TEST(SharpnessExperiment, TwoPointsAreInformational) {
  const std::vector<std::size_t> ns{2, 3};
  const SharpnessResult r = sharpness_experiment(3, Exponent::infinity(), ns, 200, 4);
  EXPECT_EQ(r.reference, Rational(2));
  EXPECT_EQ(r.verdict, Verdict::Info);
  EXPECT_EQ(r.per_n.size(), 2U);
  EXPECT_GT(r.fit.slope, 0.0);
}

TEST(SharpnessExperiment, FinitePIsInformational) {
  const std::vector<std::size_t> ns{2, 3, 4};
  const SharpnessResult r = sharpness_experiment(2, Exponent(4), ns, 10, 4);
  EXPECT_EQ(r.verdict, Verdict::Info);
  EXPECT_EQ(r.reference, Rational(1));
}
