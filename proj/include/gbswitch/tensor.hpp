#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gbswitch/error.hpp"

namespace gbswitch {

/// Number of axes m and common side length n of an n×⋯×n array.
class DimSpec {
 public:
  /// Largest admissible n^m; construction fails beyond this.
  static constexpr std::uint64_t kMaxEntries = std::uint64_t{1} << 40;

  DimSpec(std::size_t m, std::size_t n);

  [[nodiscard]] std::size_t m() const noexcept { return m_; }
  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  /// n^m.
  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  /// Stride of `axis` in the row-major layout (axis 0 slowest).
  [[nodiscard]] std::size_t stride(std::size_t axis) const;

  friend bool operator==(const DimSpec&, const DimSpec&) = default;

 private:
  std::size_t m_;
  std::size_t n_;
  std::size_t size_;
};

/// Dense ±1 array (a_{i1…im}), row-major with the first axis slowest.
class SignTensor {
 public:
  SignTensor(DimSpec dims, std::span<const int> entries);
  SignTensor(DimSpec dims, std::vector<std::int8_t> entries);

  static SignTensor all_ones(DimSpec dims);
  /// Entry k is −1 iff bit k of `bits` is set. Requires n^m ≤ 64.
  static SignTensor from_bits(DimSpec dims, std::uint64_t bits);

  [[nodiscard]] const DimSpec& dims() const noexcept { return dims_; }
  [[nodiscard]] std::span<const std::int8_t> entries() const noexcept { return entries_; }
  [[nodiscard]] int operator[](std::size_t flat) const { return entries_[flat]; }
  [[nodiscard]] int at(std::span<const std::size_t> index) const;

  friend bool operator==(const SignTensor&, const SignTensor&) = default;

 private:
  DimSpec dims_;
  std::vector<std::int8_t> entries_;
};

/// Real-valued dense array with the same layout as SignTensor.
struct RealTensor {
  DimSpec dims;
  std::vector<double> values;

  RealTensor(DimSpec d, std::vector<double> v);
  explicit RealTensor(const SignTensor& t);
};

/// One ±1 switch vector per axis.
class SwitchAssignment {
 public:
  SwitchAssignment(DimSpec dims, std::vector<std::vector<std::int8_t>> vectors);

  static SwitchAssignment all_ones(DimSpec dims);

  [[nodiscard]] const DimSpec& dims() const noexcept { return dims_; }
  [[nodiscard]] std::span<const std::int8_t> axis(std::size_t k) const { return vectors_.at(k); }
  [[nodiscard]] const std::vector<std::vector<std::int8_t>>& vectors() const noexcept {
    return vectors_;
  }

  friend bool operator==(const SwitchAssignment&, const SwitchAssignment&) = default;

 private:
  DimSpec dims_;
  std::vector<std::vector<std::int8_t>> vectors_;
};

/// Per-axis exponents (q_1, …, q_m) for an iterated norm; +∞ means max.
struct MixedExponents {
  std::vector<double> q;
};

/// Validating constructor for the tensor type; entries must be exactly ±1.
SignTensor make_tensor(DimSpec dims, std::span<const int> entries);

/// Σ a_{i1…im} x⁽¹⁾_{i1} ⋯ x⁽ᵐ⁾_{im}, computed exactly.
std::int64_t evaluate(const SignTensor& t, const SwitchAssignment& s);

/// Same form with arbitrary real vectors, one per axis.
double evaluate(const SignTensor& t, std::span<const std::vector<double>> vectors);

/// Contract every axis except `axis`. `others` holds m−1 vectors in axis
/// order with `axis` skipped; c_i = Σ a·∏ others over the remaining indices.
std::vector<std::int64_t> partial_contraction(const SignTensor& t, std::size_t axis,
                                              std::span<const std::vector<std::int8_t>> others);
std::vector<double> partial_contraction(const SignTensor& t, std::size_t axis,
                                        std::span<const std::vector<double>> others);

/// Convenience form taking a full assignment and ignoring its `axis` vector.
std::vector<std::int64_t> partial_contraction(const SignTensor& t, std::size_t axis,
                                              const SwitchAssignment& s);

/// a_{i1…im} ↦ a_{i1…im}·x⁽¹⁾_{i1}⋯x⁽ᵐ⁾_{im}. An involution.
SignTensor apply_switch(const SignTensor& t, const SwitchAssignment& s);

/// Reorders axes: axis k of the result is axis perm[k] of the input.
SignTensor permute_axes(const SignTensor& t, std::span<const std::size_t> perm);
RealTensor permute_axes(const RealTensor& t, std::span<const std::size_t> perm);

/// Relabels indices along one axis: result index i reads input index perm[i].
SignTensor permute_indices(const SignTensor& t, std::size_t axis,
                           std::span<const std::size_t> perm);

/// Iterated norm: the last axis is reduced first with q_m, then q_{m−1}, …,
/// finishing with q_1 on the first axis.
double mixed_norm(const RealTensor& t, const MixedExponents& q);
double mixed_norm(const SignTensor& t, const MixedExponents& q);

}  // namespace gbswitch
