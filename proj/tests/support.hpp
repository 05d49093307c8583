#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "gbswitch/tensor.hpp"

namespace gbtest {

using gbswitch::DimSpec;
using gbswitch::SignTensor;
using gbswitch::SwitchAssignment;

inline std::vector<std::int8_t> signs_from_bits(std::size_t n, std::uint64_t bits) {
  std::vector<std::int8_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = (bits >> i) & 1U ? -1 : 1;
  return v;
}

inline std::vector<std::int8_t> random_signs(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::int8_t> v(n);
  for (auto& x : v) x = rng() & 1U ? -1 : 1;
  return v;
}

inline SwitchAssignment random_assignment(const DimSpec& dims, std::mt19937_64& rng) {
  std::vector<std::vector<std::int8_t>> vs;
  for (std::size_t k = 0; k < dims.m(); ++k) vs.push_back(random_signs(dims.n(), rng));
  return SwitchAssignment(dims, std::move(vs));
}

inline SignTensor random_tensor(const DimSpec& dims, std::mt19937_64& rng) {
  std::vector<std::int8_t> e(dims.size());
  for (auto& x : e) x = rng() & 1U ? -1 : 1;
  return SignTensor(dims, std::move(e));
}

// Direct sum over every entry; independent of the library's contraction.
inline std::int64_t naive_evaluate(const SignTensor& t, const std::vector<std::vector<std::int8_t>>& x) {
  const std::size_t m = t.dims().m();
  const std::size_t n = t.dims().n();
  std::int64_t total = 0;
  for (std::size_t flat = 0; flat < t.dims().size(); ++flat) {
    std::int64_t term = t[flat];
    std::size_t rest = flat;
    for (std::size_t k = m; k-- > 0;) {
      term *= x[k][rest % n];
      rest /= n;
    }
    total += term;
  }
  return total;
}

// Maximum over all 2^{nm} assignments.
inline std::int64_t brute_force_max(const SignTensor& t) {
  const std::size_t m = t.dims().m();
  const std::size_t n = t.dims().n();
  const std::size_t bits = n * m;
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    std::vector<std::vector<std::int8_t>> x;
    for (std::size_t k = 0; k < m; ++k) x.push_back(signs_from_bits(n, code >> (k * n)));
    best = std::max(best, naive_evaluate(t, x));
  }
  return best;
}

}  // namespace gbtest
