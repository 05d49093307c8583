#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "gbswitch/error.hpp"
#include "gbswitch/tensor.hpp"
#include "support.hpp"

using namespace gbswitch;

namespace {

const SignTensor kCf = make_tensor(DimSpec(2, 2), std::vector<int>{1, 1, 1, -1});

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no gbswitch::Error thrown";
  return ErrorKind::ParseError;
}

SwitchAssignment assign(std::vector<std::int8_t> x, std::vector<std::int8_t> y) {
  const DimSpec dims(2, x.size());
  return SwitchAssignment(dims, {std::move(x), std::move(y)});
}

}  // namespace

TEST(DimSpec, RejectsZeroAndOverflow) {
  EXPECT_EQ(kind_of([] { DimSpec(0, 3); }), ErrorKind::DimMismatch);
  EXPECT_EQ(kind_of([] { DimSpec(2, 0); }), ErrorKind::DimMismatch);
  EXPECT_EQ(kind_of([] { DimSpec(41, 2); }), ErrorKind::SizeOverflow);
  EXPECT_NO_THROW(DimSpec(40, 2));
  EXPECT_EQ(DimSpec(3, 4).size(), 64U);
  EXPECT_EQ(DimSpec(3, 4).stride(0), 16U);
  EXPECT_EQ(DimSpec(3, 4).stride(2), 1U);
}

TEST(MakeTensor, Layout) {
  const std::size_t i11[] = {0, 0};
  const std::size_t i12[] = {0, 1};
  const std::size_t i21[] = {1, 0};
  const std::size_t i22[] = {1, 1};
  EXPECT_EQ(kCf.at(i11), 1);
  EXPECT_EQ(kCf.at(i12), 1);
  EXPECT_EQ(kCf.at(i21), 1);
  EXPECT_EQ(kCf.at(i22), -1);
}

TEST(MakeTensor, Validation) {
  EXPECT_EQ(kind_of([] { make_tensor(DimSpec(2, 2), std::vector<int>{1, 0, 1, 1}); }),
            ErrorKind::NonUnimodularEntry);
  EXPECT_EQ(kind_of([] { make_tensor(DimSpec(3, 2), std::vector<int>(7, 1)); }),
            ErrorKind::LengthMismatch);
  EXPECT_EQ(kind_of([] { make_tensor(DimSpec(2, 2), std::vector<int>{1, 2, 1, 1}); }),
            ErrorKind::NonUnimodularEntry);
}

TEST(SwitchAssignment, Validation) {
  EXPECT_EQ(kind_of([] { SwitchAssignment(DimSpec(2, 2), {{1, 1}}); }), ErrorKind::DimMismatch);
  EXPECT_EQ(kind_of([] { SwitchAssignment(DimSpec(2, 2), {{1, 1}, {1}}); }), ErrorKind::DimMismatch);
  EXPECT_EQ(kind_of([] { SwitchAssignment(DimSpec(2, 2), {{1, 1}, {1, 0}}); }),
            ErrorKind::NonUnimodularEntry);
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(kCf, assign({1, 1}, {1, 1})), 2);
  EXPECT_EQ(evaluate(SignTensor::all_ones(DimSpec(2, 3)), SwitchAssignment::all_ones(DimSpec(2, 3))), 9);
  EXPECT_EQ(evaluate(kCf, assign({1, -1}, {1, 1})), 2);
}

TEST(Evaluate, DimMismatch) {
  EXPECT_EQ(kind_of([] { (void)evaluate(kCf, SwitchAssignment::all_ones(DimSpec(2, 3))); }),
            ErrorKind::DimMismatch);
}

TEST(Evaluate, MatchesDirectSumAndRealForm) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const DimSpec dims(1 + rng() % 4, 1 + rng() % 4);
    const SignTensor t = gbtest::random_tensor(dims, rng);
    const SwitchAssignment s = gbtest::random_assignment(dims, rng);
    const std::int64_t v = evaluate(t, s);
    EXPECT_EQ(v, gbtest::naive_evaluate(t, s.vectors()));
    std::vector<std::vector<double>> real;
    for (const auto& x : s.vectors()) real.emplace_back(x.begin(), x.end());
    EXPECT_DOUBLE_EQ(evaluate(t, std::span<const std::vector<double>>(real)), static_cast<double>(v));
  }
}

TEST(PartialContraction, RowAndColumnSums) {
  const std::vector<std::vector<std::int8_t>> y{{1, 1}};
  EXPECT_EQ(partial_contraction(kCf, 0, y), (std::vector<std::int64_t>{2, 0}));
  EXPECT_EQ(partial_contraction(kCf, 1, y), (std::vector<std::int64_t>{2, 0}));
}

TEST(PartialContraction, ThreeAxesAgainstDoubleLoop) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const DimSpec dims(3, 2);
    const SignTensor t = gbtest::random_tensor(dims, rng);
    const auto x1 = gbtest::random_signs(2, rng);
    const auto x2 = gbtest::random_signs(2, rng);
    const std::vector<std::vector<std::int8_t>> others{x1, x2};
    const auto c = partial_contraction(t, 2, others);
    for (std::size_t i3 = 0; i3 < 2; ++i3) {
      std::int64_t expect = 0;
      for (std::size_t i1 = 0; i1 < 2; ++i1) {
        for (std::size_t i2 = 0; i2 < 2; ++i2) {
          const std::size_t idx[] = {i1, i2, i3};
          expect += t.at(idx) * x1[i1] * x2[i2];
        }
      }
      EXPECT_EQ(c[i3], expect);
    }
    // Middle axis too.
    const auto c1 = partial_contraction(t, 1, others);
    for (std::size_t i2 = 0; i2 < 2; ++i2) {
      std::int64_t expect = 0;
      for (std::size_t i1 = 0; i1 < 2; ++i1) {
        for (std::size_t i3 = 0; i3 < 2; ++i3) {
          const std::size_t idx[] = {i1, i2, i3};
          expect += t.at(idx) * x1[i1] * x2[i3];
        }
      }
      EXPECT_EQ(c1[i2], expect);
    }
  }
}

TEST(PartialContraction, Errors) {
  const std::vector<std::vector<std::int8_t>> y{{1, 1}};
  EXPECT_EQ(kind_of([&] { (void)partial_contraction(kCf, 2, y); }), ErrorKind::AxisOutOfRange);
  const std::vector<std::vector<std::int8_t>> too_many{{1, 1}, {1, 1}};
  EXPECT_EQ(kind_of([&] { (void)partial_contraction(kCf, 0, too_many); }), ErrorKind::DimMismatch);
}

TEST(ApplySwitch, Examples) {
  const SignTensor ones = SignTensor::all_ones(DimSpec(2, 2));
  EXPECT_EQ(apply_switch(ones, assign({1, -1}, {1, 1})),
            make_tensor(DimSpec(2, 2), std::vector<int>{1, 1, -1, -1}));
  EXPECT_EQ(apply_switch(kCf, SwitchAssignment::all_ones(DimSpec(2, 2))), kCf);
  EXPECT_EQ(apply_switch(kCf, assign({1, -1}, {1, -1})),
            make_tensor(DimSpec(2, 2), std::vector<int>{1, -1, -1, -1}));
}

TEST(ApplySwitch, InvolutionAndValueTransport) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const DimSpec dims(1 + rng() % 3, 1 + rng() % 4);
    const SignTensor t = gbtest::random_tensor(dims, rng);
    const SwitchAssignment s = gbtest::random_assignment(dims, rng);
    const SwitchAssignment u = gbtest::random_assignment(dims, rng);
    ASSERT_EQ(apply_switch(apply_switch(t, s), s), t);
    // Switching the tensor by s moves evaluation at u to evaluation at s·u.
    std::vector<std::vector<std::int8_t>> su = u.vectors();
    for (std::size_t k = 0; k < dims.m(); ++k) {
      for (std::size_t i = 0; i < dims.n(); ++i) su[k][i] = static_cast<std::int8_t>(su[k][i] * s.axis(k)[i]);
    }
    ASSERT_EQ(evaluate(apply_switch(t, s), u), evaluate(t, SwitchAssignment(dims, su)));
  }
}

TEST(Permute, AxesAndIndices) {
  const SignTensor t = make_tensor(DimSpec(2, 2), std::vector<int>{1, 1, -1, -1});
  const std::size_t swap[] = {1, 0};
  EXPECT_EQ(permute_axes(t, swap), make_tensor(DimSpec(2, 2), std::vector<int>{1, -1, 1, -1}));
  EXPECT_EQ(permute_indices(t, 0, swap), make_tensor(DimSpec(2, 2), std::vector<int>{-1, -1, 1, 1}));
  const std::size_t bad[] = {0, 0};
  EXPECT_EQ(kind_of([&] { (void)permute_axes(t, bad); }), ErrorKind::AxisOutOfRange);
  EXPECT_EQ(kind_of([&] { (void)permute_indices(t, 0, bad); }), ErrorKind::AxisOutOfRange);
  const std::size_t short_perm[] = {0};
  EXPECT_EQ(kind_of([&] { (void)permute_axes(t, short_perm); }), ErrorKind::DimMismatch);

  std::mt19937_64 rng(23);
  const DimSpec dims(3, 3);
  const SignTensor u = gbtest::random_tensor(dims, rng);
  const std::size_t cyc[] = {2, 0, 1};
  const SignTensor v = permute_axes(u, cyc);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t c = 0; c < 3; ++c) {
        // v[i0,i1,i2] = u[j] with j[perm[k]] = i_k.
        const std::size_t vi[] = {a, b, c};
        std::size_t uj[3];
        uj[2] = a;
        uj[0] = b;
        uj[1] = c;
        ASSERT_EQ(v.at(vi), u.at(uj));
      }
    }
  }
}

TEST(MixedNorm, Examples) {
  const SignTensor ones = SignTensor::all_ones(DimSpec(2, 2));
  EXPECT_NEAR(mixed_norm(ones, MixedExponents{{2.0, 1.0}}), std::sqrt(8.0), 1e-14);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const DimSpec dims(1 + rng() % 3, 1 + rng() % 4);
    std::vector<double> v(dims.size());
    for (auto& x : v) x = std::uniform_real_distribution<double>(-2, 2)(rng);
    const RealTensor t(dims, v);
    for (double r : {0.5, 1.0, 1.5, 3.0}) {
      double s = 0;
      for (double x : v) s += std::pow(std::abs(x), r);
      EXPECT_NEAR(mixed_norm(t, MixedExponents{std::vector<double>(dims.m(), r)}), std::pow(s, 1 / r),
                  1e-12 * std::pow(s, 1 / r));
    }
    double mx = 0;
    for (double x : v) mx = std::max(mx, std::abs(x));
    EXPECT_DOUBLE_EQ(mixed_norm(t, MixedExponents{std::vector<double>(dims.m(), INFINITY)}), mx);
  }
}

TEST(MixedNorm, Errors) {
  const SignTensor ones = SignTensor::all_ones(DimSpec(2, 2));
  EXPECT_EQ(kind_of([&] { (void)mixed_norm(ones, MixedExponents{{2.0}}); }), ErrorKind::DimMismatch);
  EXPECT_EQ(kind_of([&] { (void)mixed_norm(ones, MixedExponents{{2.0, 0.0}}); }), ErrorKind::InvalidExponent);
  EXPECT_EQ(kind_of([&] { (void)mixed_norm(ones, MixedExponents{{-1.0, 2.0}}); }), ErrorKind::InvalidExponent);
}

// (Σ_j (Σ_i |a_ij|^p)^{q/p})^{1/q} ≤ (Σ_i (Σ_j |a_ij|^q)^{p/q})^{1/p}
// for 0 < p < q, with both sides also summed directly.
TEST(MixedNormProperty, Minkowski) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> entry(-3.0, 3.0);
  std::uniform_real_distribution<double> expo(0.2, 6.0);
  const std::size_t swap[] = {1, 0};
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    double p = expo(rng);
    double q = expo(rng);
    if (p > q) std::swap(p, q);
    if (q - p < 1e-3) q = p + 0.5;
    std::vector<double> a(n * n);
    for (auto& x : a) x = entry(rng);
    const RealTensor t(DimSpec(2, n), a);

    double lhs_direct = 0;
    for (std::size_t j = 0; j < n; ++j) {
      double inner = 0;
      for (std::size_t i = 0; i < n; ++i) inner += std::pow(std::abs(a[i * n + j]), p);
      lhs_direct += std::pow(inner, q / p);
    }
    lhs_direct = std::pow(lhs_direct, 1 / q);
    double rhs_direct = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double inner = 0;
      for (std::size_t j = 0; j < n; ++j) inner += std::pow(std::abs(a[i * n + j]), q);
      rhs_direct += std::pow(inner, p / q);
    }
    rhs_direct = std::pow(rhs_direct, 1 / p);

    const double lhs = mixed_norm(permute_axes(t, swap), MixedExponents{{q, p}});
    const double rhs = mixed_norm(t, MixedExponents{{p, q}});
    ASSERT_NEAR(lhs, lhs_direct, 1e-10 * lhs_direct);
    ASSERT_NEAR(rhs, rhs_direct, 1e-10 * rhs_direct);
    ASSERT_LE(lhs, rhs * (1 + 1e-12)) << "p=" << p << " q=" << q << " n=" << n;
  }
}
