#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "gbswitch/tensor.hpp"

namespace gbswitch {

enum class SolveMethod { Exact, Majority, LocalSearch, RandomRestart };

std::string_view to_string(SolveMethod method);

/// Outcome of a ±1 maximization. The constructor re-evaluates the form at
/// the witness and throws std::logic_error if it disagrees with `value`.
class SolveResult {
 public:
  SolveResult(const SignTensor& t, SwitchAssignment witness, std::int64_t value,
              SolveMethod method, std::uint64_t evaluations);

  [[nodiscard]] std::int64_t value() const noexcept { return value_; }
  [[nodiscard]] const SwitchAssignment& witness() const noexcept { return witness_; }
  [[nodiscard]] SolveMethod method() const noexcept { return method_; }
  [[nodiscard]] std::uint64_t evaluations() const noexcept { return evaluations_; }

 private:
  std::int64_t value_;
  SwitchAssignment witness_;
  SolveMethod method_;
  std::uint64_t evaluations_;
};

/// Limit on the number of enumerated sign bits n·(m−1)−1 for exact_max.
struct ExactBudget {
  std::size_t max_free_bits = 30;
};

/// Number of sign bits exact_max enumerates for these dimensions.
std::size_t exact_free_bits(const DimSpec& dims) noexcept;
bool exact_within_budget(const DimSpec& dims, ExactBudget budget = {}) noexcept;

/// Exact maximum of evaluate() over all ±1 assignments.
///
/// Axes 1..m−1 are enumerated in Gray-code order with x⁽¹⁾₁ = +1 fixed; the
/// last axis is eliminated as Σ|c_i|. Among maximizers the witness whose
/// enumerated coordinates are lexicographically smallest (+1 before −1) is
/// returned, independent of how the search is split across workers.
SolveResult exact_max(const SignTensor& t, ExactBudget budget = {});

struct MajorityFix {
  std::vector<std::int8_t> last_axis;
  std::int64_t value = 0;
};

/// Optimal last-axis switches for fixed switches on axes 1..m−1:
/// x_i = sign(c_i) with sign(0) = +1, value Σ|c_i|.
MajorityFix majority_fix(const SignTensor& t, std::span<const std::vector<std::int8_t>> partial);

/// Best of `restarts` rounds of (uniform random axes 1..m−1, majority_fix).
/// Round r draws from mix_seed(seed, {r}); ties go to the lowest round.
SolveResult random_restart_greedy(const SignTensor& t, std::size_t restarts, std::uint64_t seed);

struct LocalSearchResult {
  SolveResult result;
  /// Value after each accepted flip, starting with the start value.
  std::vector<std::int64_t> trajectory;
  std::size_t flips = 0;
  /// False when max_sweeps stopped the search before a local optimum.
  bool converged = false;
};

/// Best-improvement hill climbing over single-coordinate switch flips.
/// Ties are broken by the lowest (axis, index).
LocalSearchResult local_search(const SignTensor& t, const SwitchAssignment& start,
                               std::size_t max_sweeps);

/// True iff t is one of the eight 2×2 matrices attaining 2^{−1/2}·n^{3/2}.
bool classify_extremal(const SignTensor& t);

}  // namespace gbswitch
