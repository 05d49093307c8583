#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gbswitch/rational.hpp"
#include "gbswitch/solvers.hpp"
#include "gbswitch/tensor.hpp"

namespace gbswitch {

enum class Verdict { Pass, Fail, Info };

std::string_view to_string(Verdict verdict);

namespace ksz {

struct NormSample {
  int m = 0;
  std::size_t n = 0;
  Exponent p = Exponent::infinity();
  double min_norm = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// True iff every norm came from exact_max (p = ∞ only).
  bool exact = false;
};

struct SamplingOptions {
  ExactBudget budget{};
  /// Random starts per tensor for finite-p estimates.
  std::size_t alt_starts = 8;
};

/// Tensor number `index` of the (seed, n) stream: mix_seed(seed, {n, index}).
SignTensor sample_tensor(int m, std::size_t n, std::uint64_t seed, std::size_t index);

/// Operator norm on (ℓp^n)^m of `t`: exact_max at p = ∞, best-of-starts
/// alternating maximization otherwise (a lower estimate).
double operator_norm(const SignTensor& t, const Exponent& p, const SamplingOptions& options,
                     std::uint64_t seed);

/// Minimum norm over `samples` uniform sign tensors.
NormSample sample_min_norm(int m, std::size_t n, const Exponent& p, std::size_t samples,
                           std::uint64_t seed, const SamplingOptions& options = {});

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
  /// Root-mean-square residual in log space.
  double residual = 0.0;
};

/// Least squares of log(value) against log(n).
FitResult fit_exponent(std::span<const std::pair<double, double>> points);

/// Acceptance window [reference − below, reference + above] for the slope.
struct SlopeWindow {
  double below = 0.1;
  double above = 0.2;
};

struct SharpnessResult {
  FitResult fit;
  std::vector<NormSample> per_n;
  Rational reference;
  Verdict verdict = Verdict::Info;
};

/// Minimum-norm samples for each n, a log-log fit, and a verdict against
/// the KSZ exponent. Only exact norms with at least three distinct n are
/// judged; everything else is Info.
SharpnessResult sharpness_experiment(int m, const Exponent& p, std::span<const std::size_t> n_values,
                                     std::size_t samples, std::uint64_t seed,
                                     SlopeWindow window = {},
                                     const SamplingOptions& options = {});

}  // namespace ksz
}  // namespace gbswitch
