#include "gbswitch/lp_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gbswitch/bounds.hpp"
#include "gbswitch/parallel.hpp"
#include "gbswitch/rng.hpp"

namespace gbswitch {

namespace {

void require_at_least_one(const Exponent& p) {
  if (p.is_finite() && p.value() < Rational(1)) {
    throw Error(ErrorKind::InvalidExponent, "p must be in [1, inf], got " + p.str());
  }
}

}  // namespace

double lp_norm(std::span<const double> x, const Exponent& p) {
  if (p.is_finite() && p.value().sign() <= 0) {
    throw Error(ErrorKind::InvalidExponent, "norm exponent must be positive");
  }
  double scale = 0.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  if (p.is_infinite() || scale == 0.0) return scale;
  const double q = p.to_double();
  double sum = 0.0;
  for (double v : x) sum += std::pow(std::abs(v) / scale, q);
  return scale * std::pow(sum, 1.0 / q);
}

LpPoint::LpPoint(Exponent p, std::vector<double> coords) : p_(p), coords_(std::move(coords)) {
  require_at_least_one(p_);
  const double norm = lp_norm(coords_, p_);
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    throw Error(ErrorKind::InvalidExponent,
                "point is not on the unit l_" + p_.str() + " sphere (norm " + std::to_string(norm) + ")");
  }
}

DualUpdate dual_update(std::span<const double> c, const Exponent& p) {
  require_at_least_one(p);
  const std::size_t n = c.size();
  if (n == 0) throw Error(ErrorKind::DimMismatch, "empty coefficient vector");
  std::vector<double> x(n, 0.0);

  std::size_t arg = 0;
  double largest = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(c[i]) > largest) {
      largest = std::abs(c[i]);
      arg = i;
    }
  }
  if (largest == 0.0) {
    x[0] = 1.0;
    return {LpPoint(p, std::move(x)), 0.0};
  }

  if (p.is_infinite()) {
    double value = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = c[i] < 0 ? -1.0 : 1.0;
      value += std::abs(c[i]);
    }
    return {LpPoint(p, std::move(x)), value};
  }
  if (p.value() == Rational(1)) {
    x[arg] = c[arg] < 0 ? -1.0 : 1.0;
    return {LpPoint(p, std::move(x)), largest};
  }

  // q = p/(p−1); work with c/max|c| so that |c|^{q−1} cannot overflow.
  const double q = (p.value() / (p.value() - Rational(1))).to_double();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += std::pow(std::abs(c[i]) / largest, q);
  const double scaled_norm = std::pow(sum, 1.0 / q);
  const double denom = std::pow(scaled_norm, q - 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double mag = std::pow(std::abs(c[i]) / largest, q - 1.0) / denom;
    x[i] = c[i] < 0 ? -mag : mag;
  }
  return {LpPoint(p, std::move(x)), largest * scaled_norm};
}

AltMaxResult alternating_ascent(const SignTensor& t, const Exponent& p,
                                std::vector<std::vector<double>> start, std::size_t sweeps_max,
                                double tol) {
  require_at_least_one(p);
  const std::size_t m = t.dims().m();
  if (start.size() != m) throw Error(ErrorKind::DimMismatch, "need one start vector per axis");
  for (auto& v : start) {
    if (v.size() != t.dims().n()) throw Error(ErrorKind::DimMismatch, "start vector has wrong length");
    const double norm = lp_norm(v, p);
    if (norm == 0.0) throw Error(ErrorKind::DegenerateInput, "zero start vector");
    for (double& e : v) e /= norm;
  }

  AltMaxResult out;
  out.trace.values.push_back(evaluate(t, std::span<const std::vector<double>>(start)));
  std::vector<std::vector<double>> others;
  others.reserve(m - 1);
  for (std::size_t sweep = 0; sweep < sweeps_max; ++sweep) {
    double value = out.trace.values.back();
    for (std::size_t k = 0; k < m; ++k) {
      others.clear();
      for (std::size_t j = 0; j < m; ++j) {
        if (j != k) others.push_back(start[j]);
      }
      const auto c = partial_contraction(t, k, std::span<const std::vector<double>>(others));
      DualUpdate update = dual_update(c, p);
      start[k] = update.point.coords();
      value = update.value;
    }
    const double previous = out.trace.values.back();
    out.trace.values.push_back(value);
    out.trace.sweeps = sweep + 1;
    if (value - previous <= tol * std::max(std::abs(value), std::numeric_limits<double>::min())) {
      out.trace.converged = true;
      break;
    }
  }
  out.value = evaluate(t, std::span<const std::vector<double>>(start));
  for (auto& v : start) out.witness.emplace_back(p, std::move(v));
  return out;
}

AltMaxResult alternating_max(const SignTensor& t, const Exponent& p, const AltMaxOptions& options) {
  require_at_least_one(p);
  if (options.starts == 0) throw Error(ErrorKind::DegenerateInput, "starts must be >= 1");
  const DimSpec& dims = t.dims();
  std::vector<AltMaxResult> runs(options.starts);
  parallel_for(options.starts, [&](std::size_t s) {
    SignSource source(mix_seed(options.seed, {s}));
    std::vector<std::vector<double>> start(dims.m());
    for (auto& v : start) {
      for (std::int8_t e : source.vector(dims.n())) v.push_back(e);
    }
    runs[s] = alternating_ascent(t, p, std::move(start), options.sweeps_max, options.tol);
  });
  std::size_t best = 0;
  for (std::size_t s = 1; s < runs.size(); ++s) {
    if (runs[s].value > runs[best].value) best = s;
  }
  AltMaxResult out = std::move(runs[best]);
  out.best_start = best;
  return out;
}

Rational g_lower_bound_exponent(int m, const Exponent& p) {
  const Rational mm(m);
  const Rational threshold = Rational(2 * m, m + 1);
  if (p.is_finite() && p.value() <= threshold) {
    throw Error(ErrorKind::InvalidExponent,
                "lower-bound formula needs p > 2m/(m+1) = " + threshold.str() + ", got " + p.str());
  }
  if (p.is_infinite()) return Rational(m + 1, 2);
  const Rational& pv = p.value();
  return (mm * pv + pv - Rational(2) * mm) / (Rational(2) * pv);
}

double g_lower_bound_formula(int m, std::uint64_t n, const Exponent& p) {
  if (m < 1) throw Error(ErrorKind::DimMismatch, "m must be positive");
  const double exponent = g_lower_bound_exponent(m, p).to_double();
  return std::pow(static_cast<double>(n), exponent) / bounds::km_constant(m);
}

double weak_l1_norm(std::uint64_t n, const Exponent& p) {
  if (p.is_finite() && p.value() <= Rational(1)) {
    throw Error(ErrorKind::InvalidExponent, "weak l1 norm needs p in (1, inf]");
  }
  if (p.is_infinite()) return 1.0;
  return std::pow(static_cast<double>(n), (Rational(1) / p.value()).to_double());
}

}  // namespace gbswitch
