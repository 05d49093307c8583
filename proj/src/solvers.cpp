#include "gbswitch/solvers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "gbswitch/parallel.hpp"
#include "gbswitch/rng.hpp"

namespace gbswitch {

namespace {

std::int8_t sign_of(std::int64_t v) { return v < 0 ? std::int8_t{-1} : std::int8_t{1}; }

std::int64_t abs_sum(const std::vector<std::int64_t>& c) {
  std::int64_t total = 0;
  for (std::int64_t v : c) total += std::abs(v);
  return total;
}

struct Coordinate {
  std::size_t axis;
  std::size_t index;
};

struct Candidate {
  std::int64_t value;
  std::uint64_t code;
};

bool better(const Candidate& a, const Candidate& b) {
  return a.value > b.value || (a.value == b.value && a.code < b.code);
}

// Gray-code search over the enumerated axes 0..m−2 (x⁽¹⁾₁ pinned to +1),
// keeping c = contraction onto the last axis up to date after each flip.
class ExactSearch {
 public:
  explicit ExactSearch(const SignTensor& t) : t_(t), m_(t.dims().m()), n_(t.dims().n()) {
    for (std::size_t k = 0; k + 1 < m_; ++k) {
      for (std::size_t i = (k == 0 ? 1 : 0); i < n_; ++i) coords_.push_back({k, i});
    }
  }

  [[nodiscard]] std::size_t bits() const { return coords_.size(); }

  // Vectors for axes 0..m−2 encoded by `code`; bit (B−1−idx) set means
  // coordinate idx is −1, so the first coordinate is the most significant.
  [[nodiscard]] std::vector<std::vector<std::int8_t>> decode(std::uint64_t code) const {
    std::vector<std::vector<std::int8_t>> x(m_ - 1, std::vector<std::int8_t>(n_, 1));
    const std::size_t b = bits();
    for (std::size_t idx = 0; idx < b; ++idx) {
      if ((code >> (b - 1 - idx)) & 1U) x[coords_[idx].axis][coords_[idx].index] = -1;
    }
    return x;
  }

  // Best candidate among codes whose top bits equal `prefix` (low_bits free).
  [[nodiscard]] Candidate run_chunk(std::uint64_t prefix, std::size_t low_bits) const {
    std::uint64_t code = prefix << low_bits;
    auto x = decode(code);
    std::vector<std::int64_t> c = partial_contraction(t_, m_ - 1, std::span<const std::vector<std::int8_t>>(x));
    Candidate best{abs_sum(c), code};
    std::vector<std::int64_t> slice(n_);
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    const std::size_t b = bits();
    for (std::uint64_t s = 1; s < steps; ++s) {
      const auto j = static_cast<std::size_t>(std::countr_zero(s));
      code ^= std::uint64_t{1} << j;
      const Coordinate& coord = coords_[b - 1 - j];
      slice_contraction(x, coord, slice);
      const std::int64_t factor = -2 * x[coord.axis][coord.index];
      std::int64_t value = 0;
      for (std::size_t l = 0; l < n_; ++l) {
        c[l] += factor * slice[l];
        value += std::abs(c[l]);
      }
      x[coord.axis][coord.index] = static_cast<std::int8_t>(-x[coord.axis][coord.index]);
      const Candidate here{value, code};
      if (better(here, best)) best = here;
    }
    return best;
  }

 private:
  // g_l = Σ a[…, i_k = coord.index, …, l] ∏_{j ∉ {k, m−1}} x⁽ʲ⁾, i.e. the
  // change in c per unit change of x⁽ᵏ⁾_i.
  void slice_contraction(const std::vector<std::vector<std::int8_t>>& x, const Coordinate& coord,
                         std::vector<std::int64_t>& out) const {
    std::fill(out.begin(), out.end(), 0);
    const auto entries = t_.entries();
    if (m_ == 2) {
      const std::int8_t* row = entries.data() + coord.index * n_;
      for (std::size_t l = 0; l < n_; ++l) out[l] = row[l];
      return;
    }
    // Odometer over the m−2 free enumerated axes.
    std::vector<std::size_t> index(m_ - 1, 0);
    index[coord.axis] = coord.index;
    while (true) {
      std::int64_t weight = 1;
      std::size_t base = 0;
      for (std::size_t k = 0; k + 1 < m_; ++k) {
        base = base * n_ + index[k];
        if (k != coord.axis) weight *= x[k][index[k]];
      }
      const std::int8_t* row = entries.data() + base * n_;
      for (std::size_t l = 0; l < n_; ++l) out[l] += weight * row[l];
      std::size_t k = m_ - 1;
      while (k-- > 0) {
        if (k == coord.axis) continue;
        if (++index[k] < n_) break;
        index[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
  }

  const SignTensor& t_;
  std::size_t m_;
  std::size_t n_;
  std::vector<Coordinate> coords_;
};

SwitchAssignment with_last_axis(const DimSpec& dims, std::vector<std::vector<std::int8_t>> partial,
                                std::vector<std::int8_t> last) {
  partial.push_back(std::move(last));
  return {dims, std::move(partial)};
}

}  // namespace

std::string_view to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::Exact: return "exact";
    case SolveMethod::Majority: return "majority";
    case SolveMethod::LocalSearch: return "local";
    case SolveMethod::RandomRestart: return "greedy";
  }
  return "unknown";
}

SolveResult::SolveResult(const SignTensor& t, SwitchAssignment witness, std::int64_t value,
                         SolveMethod method, std::uint64_t evaluations)
    : value_(value), witness_(std::move(witness)), method_(method), evaluations_(evaluations) {
  if (evaluate(t, witness_) != value_) {
    throw std::logic_error("SolveResult: witness does not reproduce value " + std::to_string(value_));
  }
}

std::size_t exact_free_bits(const DimSpec& dims) noexcept {
  return dims.m() == 1 ? 0 : dims.n() * (dims.m() - 1) - 1;
}

bool exact_within_budget(const DimSpec& dims, ExactBudget budget) noexcept {
  return exact_free_bits(dims) <= budget.max_free_bits;
}

SolveResult exact_max(const SignTensor& t, ExactBudget budget) {
  const DimSpec& dims = t.dims();
  const std::size_t free_bits = exact_free_bits(dims);
  if (free_bits > budget.max_free_bits || free_bits > 62) {
    throw Error(ErrorKind::BudgetExceeded, "exact search needs 2^" + std::to_string(free_bits) +
                                               " vertices, budget is 2^" +
                                               std::to_string(budget.max_free_bits));
  }
  if (dims.m() == 1) {
    std::vector<std::int8_t> x(dims.n());
    std::int64_t value = 0;
    for (std::size_t i = 0; i < dims.n(); ++i) {
      x[i] = t.entries()[i];
      value += 1;
    }
    return {t, SwitchAssignment(dims, {std::move(x)}), value, SolveMethod::Exact, 1};
  }

  const ExactSearch search(t);
  // The split is fixed by the instance size alone; the reduction below is
  // order-independent anyway.
  const std::size_t split = free_bits > 12 ? std::min<std::size_t>(free_bits - 12, 8) : 0;
  const std::size_t low_bits = free_bits - split;
  std::vector<Candidate> chunk_best(std::size_t{1} << split);
  parallel_for(chunk_best.size(), [&](std::size_t prefix) {
    chunk_best[prefix] = search.run_chunk(prefix, low_bits);
  });
  Candidate best = chunk_best.front();
  for (const Candidate& c : chunk_best) {
    if (better(c, best)) best = c;
  }

  auto partial = search.decode(best.code);
  MajorityFix fix = majority_fix(t, partial);
  return {t, with_last_axis(dims, std::move(partial), std::move(fix.last_axis)), fix.value,
          SolveMethod::Exact, std::uint64_t{1} << free_bits};
}

MajorityFix majority_fix(const SignTensor& t, std::span<const std::vector<std::int8_t>> partial) {
  const std::size_t last = t.dims().m() - 1;
  for (const auto& v : partial) {
    for (std::int8_t e : v) {
      if (e != 1 && e != -1) throw Error(ErrorKind::NonUnimodularEntry, "switch entries must be ±1");
    }
  }
  const std::vector<std::int64_t> c = partial_contraction(t, last, partial);
  MajorityFix out;
  out.last_axis.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    out.last_axis[i] = sign_of(c[i]);
    out.value += std::abs(c[i]);
  }
  return out;
}

SolveResult random_restart_greedy(const SignTensor& t, std::size_t restarts, std::uint64_t seed) {
  if (restarts == 0) throw Error(ErrorKind::DegenerateInput, "restarts must be >= 1");
  const DimSpec& dims = t.dims();
  struct Round {
    std::vector<std::vector<std::int8_t>> partial;
    MajorityFix fix;
  };
  std::vector<Round> rounds(restarts);
  parallel_for(restarts, [&](std::size_t r) {
    SignSource source(mix_seed(seed, {r}));
    Round& round = rounds[r];
    for (std::size_t k = 0; k + 1 < dims.m(); ++k) round.partial.push_back(source.vector(dims.n()));
    round.fix = majority_fix(t, round.partial);
  });
  std::size_t best = 0;
  for (std::size_t r = 1; r < restarts; ++r) {
    if (rounds[r].fix.value > rounds[best].fix.value) best = r;
  }
  Round& win = rounds[best];
  return {t, with_last_axis(dims, std::move(win.partial), std::move(win.fix.last_axis)), win.fix.value,
          SolveMethod::RandomRestart, restarts};
}

LocalSearchResult local_search(const SignTensor& t, const SwitchAssignment& start,
                               std::size_t max_sweeps) {
  const DimSpec& dims = t.dims();
  std::int64_t value = evaluate(t, start);
  auto vectors = start.vectors();
  std::vector<std::int64_t> trajectory{value};
  std::uint64_t evaluations = 1;
  bool converged = false;
  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    const SwitchAssignment current(dims, vectors);
    std::int64_t best_gain = 0;
    std::size_t best_axis = 0;
    std::size_t best_index = 0;
    for (std::size_t k = 0; k < dims.m(); ++k) {
      const auto c = partial_contraction(t, k, current);
      for (std::size_t i = 0; i < dims.n(); ++i) {
        const std::int64_t gain = -2 * vectors[k][i] * c[i];
        ++evaluations;
        if (gain > best_gain) {
          best_gain = gain;
          best_axis = k;
          best_index = i;
        }
      }
    }
    if (best_gain <= 0) {
      converged = true;
      break;
    }
    vectors[best_axis][best_index] = static_cast<std::int8_t>(-vectors[best_axis][best_index]);
    value += best_gain;
    trajectory.push_back(value);
  }
  if (!converged) {
    // One more scan decides whether the final point is a local optimum.
    const SwitchAssignment current(dims, vectors);
    converged = true;
    for (std::size_t k = 0; k < dims.m() && converged; ++k) {
      const auto c = partial_contraction(t, k, current);
      for (std::size_t i = 0; i < dims.n(); ++i) {
        if (-2 * vectors[k][i] * c[i] > 0) {
          converged = false;
          break;
        }
      }
    }
  }
  const std::size_t flips = trajectory.size() - 1;
  return {SolveResult(t, SwitchAssignment(dims, std::move(vectors)), value, SolveMethod::LocalSearch,
                      evaluations),
          std::move(trajectory), flips, converged};
}

bool classify_extremal(const SignTensor& t) {
  if (t.dims().m() != 2 || t.dims().n() != 2) return false;
  static constexpr std::array<std::array<int, 4>, 4> kExtremal = {{
      {1, 1, 1, -1},
      {1, 1, -1, 1},
      {1, -1, 1, 1},
      {-1, 1, 1, 1},
  }};
  const auto e = t.entries();
  for (const auto& pattern : kExtremal) {
    bool same = true;
    bool negated = true;
    for (std::size_t i = 0; i < 4; ++i) {
      same = same && e[i] == pattern[i];
      negated = negated && e[i] == -pattern[i];
    }
    if (same || negated) return true;
  }
  return false;
}

}  // namespace gbswitch
