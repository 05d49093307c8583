#include "gbswitch/ksz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "gbswitch/bounds.hpp"
#include "gbswitch/lp_optimizer.hpp"
#include "gbswitch/parallel.hpp"
#include "gbswitch/rng.hpp"

namespace gbswitch {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Info: return "INFO";
  }
  return "INFO";
}

namespace ksz {

SignTensor sample_tensor(int m, std::size_t n, std::uint64_t seed, std::size_t index) {
  return random_sign_tensor(DimSpec(static_cast<std::size_t>(m), n), mix_seed(seed, {n, index}));
}

double operator_norm(const SignTensor& t, const Exponent& p, const SamplingOptions& options,
                     std::uint64_t seed) {
  if (p.is_infinite()) return static_cast<double>(exact_max(t, options.budget).value());
  AltMaxOptions alt;
  alt.starts = options.alt_starts;
  alt.seed = seed;
  return alternating_max(t, p, alt).value;
}

NormSample sample_min_norm(int m, std::size_t n, const Exponent& p, std::size_t samples,
                           std::uint64_t seed, const SamplingOptions& options) {
  if (samples == 0) throw Error(ErrorKind::DegenerateInput, "samples must be >= 1");
  if (m < 1) throw Error(ErrorKind::DimMismatch, "m must be positive");
  const DimSpec dims(static_cast<std::size_t>(m), n);
  const bool exact = p.is_infinite();
  if (exact && !exact_within_budget(dims, options.budget)) {
    throw Error(ErrorKind::BudgetExceeded, "exact norms at p=inf exceed the budget for m=" +
                                               std::to_string(m) + ", n=" + std::to_string(n));
  }
  std::vector<double> norms(samples);
  parallel_for(samples, [&](std::size_t i) {
    const SignTensor t = sample_tensor(m, n, seed, i);
    norms[i] = operator_norm(t, p, options, mix_seed(seed, {n, i, 1}));
  });
  NormSample out;
  out.m = m;
  out.n = n;
  out.p = p;
  out.min_norm = *std::min_element(norms.begin(), norms.end());
  out.samples = samples;
  out.seed = seed;
  out.exact = exact;
  return out;
}

FitResult fit_exponent(std::span<const std::pair<double, double>> points) {
  std::set<double> distinct;
  for (const auto& [n, value] : points) {
    if (!(n > 0.0) || !(value > 0.0)) {
      throw Error(ErrorKind::DegenerateInput, "fit needs positive n and values");
    }
    distinct.insert(n);
  }
  if (distinct.size() < 2) throw Error(ErrorKind::DegenerateInput, "fit needs at least two distinct n");
  const auto k = static_cast<double>(points.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [n, value] : points) {
    mean_x += std::log(n);
    mean_y += std::log(value);
  }
  mean_x /= k;
  mean_y /= k;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [n, value] : points) {
    const double dx = std::log(n) - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(value) - mean_y);
  }
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  fit.points = points.size();
  double ss = 0.0;
  for (const auto& [n, value] : points) {
    const double e = std::log(value) - (fit.intercept + fit.slope * std::log(n));
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / k);
  return fit;
}

SharpnessResult sharpness_experiment(int m, const Exponent& p, std::span<const std::size_t> n_values,
                                     std::size_t samples, std::uint64_t seed, SlopeWindow window,
                                     const SamplingOptions& options) {
  std::set<std::size_t> distinct(n_values.begin(), n_values.end());
  if (distinct.size() < 2) throw Error(ErrorKind::DegenerateInput, "sharpness fit needs two distinct n");
  SharpnessResult out;
  out.reference = bounds::ksz_exponent(m, p);
  std::vector<std::pair<double, double>> points;
  bool all_exact = true;
  for (std::size_t n : n_values) {
    NormSample sample = sample_min_norm(m, n, p, samples, seed, options);
    all_exact = all_exact && sample.exact;
    points.emplace_back(static_cast<double>(n), sample.min_norm);
    out.per_n.push_back(sample);
  }
  out.fit = fit_exponent(points);
  if (all_exact && distinct.size() >= 3) {
    const double ref = out.reference.to_double();
    const bool inside = out.fit.slope >= ref - window.below && out.fit.slope <= ref + window.above;
    out.verdict = inside ? Verdict::Pass : Verdict::Fail;
  }
  return out;
}

}  // namespace ksz
}  // namespace gbswitch
