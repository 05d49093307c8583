#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gbswitch/rational.hpp"
#include "gbswitch/tensor.hpp"

namespace gbswitch {

/// ‖x‖_p for p ∈ (0, ∞].
double lp_norm(std::span<const double> x, const Exponent& p);

/// A vector on the unit ℓp sphere (‖x‖_p = 1 within 1e−12).
class LpPoint {
 public:
  static constexpr double kNormTolerance = 1e-12;

  LpPoint(Exponent p, std::vector<double> coords);

  [[nodiscard]] const Exponent& p() const noexcept { return p_; }
  [[nodiscard]] const std::vector<double>& coords() const noexcept { return coords_; }

 private:
  Exponent p_;
  std::vector<double> coords_;
};

struct DualUpdate {
  LpPoint point;
  double value;
};

/// Maximizer and maximum of ⟨c, x⟩ over ‖x‖_p = 1 (Hölder equality case).
/// The value is ‖c‖_{p/(p−1)}. c = 0 yields e_1 and value 0.
DualUpdate dual_update(std::span<const double> c, const Exponent& p);

struct AscentTrace {
  /// Form value at the start, then after every full sweep over the axes.
  std::vector<double> values;
  bool converged = false;
  std::size_t sweeps = 0;
};

struct AltMaxOptions {
  std::size_t starts = 1;
  std::size_t sweeps_max = 1000;
  double tol = 1e-10;
  std::uint64_t seed = 0;
};

struct AltMaxResult {
  double value = 0.0;
  std::vector<LpPoint> witness;
  AscentTrace trace;
  std::size_t best_start = 0;
};

/// Monotone block ascent from one explicit start. Each start vector is
/// rescaled onto the ℓp sphere first; axes are updated cyclically with
/// dual_update until the relative sweep gain drops below tol.
AltMaxResult alternating_ascent(const SignTensor& t, const Exponent& p,
                                std::vector<std::vector<double>> start, std::size_t sweeps_max,
                                double tol);

/// Best alternating_ascent over random sign starts. Start s uses
/// mix_seed(seed, {s}); ties keep the lowest start index. The result is a
/// feasible witness and hence a certified lower bound on g(p).
AltMaxResult alternating_max(const SignTensor& t, const Exponent& p, const AltMaxOptions& options);

/// n^{(mp+p−2m)/(2p)} / (1.3·m^{0.365}); requires p > 2m/(m+1).
double g_lower_bound_formula(int m, std::uint64_t n, const Exponent& p);

/// Exponent (mp+p−2m)/(2p) of the formula above, exact.
Rational g_lower_bound_exponent(int m, const Exponent& p);

/// sup of Σ|φ_j| over the unit ball of ℓ_{p*}^n, i.e. n^{1/p}; p ∈ (1, ∞].
double weak_l1_norm(std::uint64_t n, const Exponent& p);

}  // namespace gbswitch
