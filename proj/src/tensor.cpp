#include "gbswitch/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

namespace gbswitch {

namespace {

std::size_t checked_power(std::size_t n, std::size_t m) {
  std::uint64_t size = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (size > DimSpec::kMaxEntries / n) {
      throw Error(ErrorKind::SizeOverflow,
                  "n^m exceeds 2^40 for n=" + std::to_string(n) + ", m=" + std::to_string(m));
    }
    size *= n;
  }
  return static_cast<std::size_t>(size);
}

void require_same_dims(const DimSpec& a, const DimSpec& b) {
  if (a != b) {
    throw Error(ErrorKind::DimMismatch, "dimensions (m=" + std::to_string(a.m()) +
                                            ", n=" + std::to_string(a.n()) + ") vs (m=" +
                                            std::to_string(b.m()) + ", n=" + std::to_string(b.n()) + ")");
  }
}

template <typename V>
void require_vectors(const DimSpec& dims, std::span<const std::vector<V>> vectors, std::size_t count) {
  if (vectors.size() != count) {
    throw Error(ErrorKind::DimMismatch, "expected " + std::to_string(count) + " vectors, got " +
                                            std::to_string(vectors.size()));
  }
  for (const auto& v : vectors) {
    if (v.size() != dims.n()) {
      throw Error(ErrorKind::DimMismatch, "vector of length " + std::to_string(v.size()) +
                                              ", expected " + std::to_string(dims.n()));
    }
  }
}

// Reduces one axis of a row-major buffer viewed as [outer][n][inner].
template <typename Acc, typename Src, typename V>
std::vector<Acc> contract_axis(std::span<const Src> src, std::size_t outer, std::size_t n,
                               std::size_t inner, const std::vector<V>& v) {
  std::vector<Acc> out(outer * inner, Acc{0});
  for (std::size_t o = 0; o < outer; ++o) {
    Acc* dst = out.data() + o * inner;
    for (std::size_t j = 0; j < n; ++j) {
      const Acc w = static_cast<Acc>(v[j]);
      const Src* row = src.data() + (o * n + j) * inner;
      for (std::size_t i = 0; i < inner; ++i) dst[i] += w * static_cast<Acc>(row[i]);
    }
  }
  return out;
}

// Contracts every axis except `keep` (if any) with `vectors[axis]`; entries
// of `vectors` at `keep` are ignored. Axes are reduced last to first.
template <typename Acc, typename V>
std::vector<Acc> contract_except(const SignTensor& t, std::optional<std::size_t> keep,
                                 const std::vector<const std::vector<V>*>& vectors) {
  const std::size_t m = t.dims().m();
  const std::size_t n = t.dims().n();
  std::vector<Acc> buf;
  bool started = false;
  for (std::size_t d = m; d-- > 0;) {
    if (keep && *keep == d) continue;
    std::size_t outer = 1;
    for (std::size_t k = 0; k < d; ++k) outer *= n;
    const std::size_t inner = (keep && *keep > d) ? n : 1;
    if (!started) {
      buf = contract_axis<Acc, std::int8_t>(t.entries(), outer, n, inner, *vectors[d]);
      started = true;
    } else {
      buf = contract_axis<Acc, Acc>(std::span<const Acc>(buf), outer, n, inner, *vectors[d]);
    }
  }
  if (!started) {
    buf.assign(t.entries().begin(), t.entries().end());
  }
  return buf;
}

template <typename V>
std::vector<const std::vector<V>*> spread_others(const SignTensor& t, std::size_t axis,
                                                 std::span<const std::vector<V>> others) {
  const DimSpec& dims = t.dims();
  if (axis >= dims.m()) {
    throw Error(ErrorKind::AxisOutOfRange,
                "axis " + std::to_string(axis) + " with m=" + std::to_string(dims.m()));
  }
  require_vectors(dims, others, dims.m() - 1);
  std::vector<const std::vector<V>*> ptrs(dims.m(), nullptr);
  for (std::size_t k = 0, j = 0; k < dims.m(); ++k) {
    if (k != axis) ptrs[k] = &others[j++];
  }
  return ptrs;
}

void validate_sign(int v, std::size_t position) {
  if (v != 1 && v != -1) {
    throw Error(ErrorKind::NonUnimodularEntry,
                "value " + std::to_string(v) + " at position " + std::to_string(position));
  }
}

// Generic axis permutation on a flat row-major array.
template <typename T>
std::vector<T> permute_flat(const DimSpec& dims, std::span<const T> src,
                            std::span<const std::size_t> perm) {
  const std::size_t m = dims.m();
  std::vector<bool> seen(m, false);
  if (perm.size() != m) throw Error(ErrorKind::DimMismatch, "axis permutation has wrong length");
  for (std::size_t a : perm) {
    if (a >= m || seen[a]) throw Error(ErrorKind::AxisOutOfRange, "not a permutation of the axes");
    seen[a] = true;
  }
  std::vector<T> out(src.size());
  std::vector<std::size_t> index(m, 0);
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    // index is the multi-index of `flat` in the output layout.
    std::size_t source = 0;
    for (std::size_t k = 0; k < m; ++k) source += index[k] * dims.stride(perm[k]);
    out[flat] = src[source];
    for (std::size_t k = m; k-- > 0;) {
      if (++index[k] < dims.n()) break;
      index[k] = 0;
    }
  }
  return out;
}

double reduce_norm(std::span<const double> values, double q) {
  if (std::isinf(q)) {
    double best = 0.0;
    for (double v : values) best = std::max(best, std::abs(v));
    return best;
  }
  double sum = 0.0;
  for (double v : values) sum += std::pow(std::abs(v), q);
  return std::pow(sum, 1.0 / q);
}

}  // namespace

DimSpec::DimSpec(std::size_t m, std::size_t n) : m_(m), n_(n), size_(0) {
  if (m == 0 || n == 0) {
    throw Error(ErrorKind::DimMismatch, "m and n must be positive");
  }
  size_ = checked_power(n, m);
}

std::size_t DimSpec::stride(std::size_t axis) const {
  if (axis >= m_) throw Error(ErrorKind::AxisOutOfRange, "axis " + std::to_string(axis));
  std::size_t s = 1;
  for (std::size_t k = axis + 1; k < m_; ++k) s *= n_;
  return s;
}

SignTensor::SignTensor(DimSpec dims, std::span<const int> entries) : dims_(dims) {
  if (entries.size() != dims.size()) {
    throw Error(ErrorKind::LengthMismatch, "got " + std::to_string(entries.size()) +
                                               " entries, expected " + std::to_string(dims.size()));
  }
  entries_.resize(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    validate_sign(entries[i], i);
    entries_[i] = static_cast<std::int8_t>(entries[i]);
  }
}

SignTensor::SignTensor(DimSpec dims, std::vector<std::int8_t> entries)
    : dims_(dims), entries_(std::move(entries)) {
  if (entries_.size() != dims.size()) {
    throw Error(ErrorKind::LengthMismatch, "got " + std::to_string(entries_.size()) +
                                               " entries, expected " + std::to_string(dims.size()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) validate_sign(entries_[i], i);
}

SignTensor SignTensor::all_ones(DimSpec dims) {
  return {dims, std::vector<std::int8_t>(dims.size(), 1)};
}

SignTensor SignTensor::from_bits(DimSpec dims, std::uint64_t bits) {
  if (dims.size() > 64) throw Error(ErrorKind::SizeOverflow, "from_bits needs n^m <= 64");
  std::vector<std::int8_t> entries(dims.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries[i] = ((bits >> i) & 1U) ? std::int8_t{-1} : std::int8_t{1};
  }
  return {dims, std::move(entries)};
}

int SignTensor::at(std::span<const std::size_t> index) const {
  if (index.size() != dims_.m()) throw Error(ErrorKind::DimMismatch, "index has wrong arity");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] >= dims_.n()) throw Error(ErrorKind::AxisOutOfRange, "index out of range");
    flat = flat * dims_.n() + index[k];
  }
  return entries_[flat];
}

RealTensor::RealTensor(DimSpec d, std::vector<double> v) : dims(d), values(std::move(v)) {
  if (values.size() != dims.size()) {
    throw Error(ErrorKind::LengthMismatch, "got " + std::to_string(values.size()) +
                                               " values, expected " + std::to_string(dims.size()));
  }
}

RealTensor::RealTensor(const SignTensor& t)
    : dims(t.dims()), values(t.entries().begin(), t.entries().end()) {}

SwitchAssignment::SwitchAssignment(DimSpec dims, std::vector<std::vector<std::int8_t>> vectors)
    : dims_(dims), vectors_(std::move(vectors)) {
  require_vectors(dims_, std::span<const std::vector<std::int8_t>>(vectors_), dims_.m());
  for (const auto& v : vectors_) {
    for (std::size_t i = 0; i < v.size(); ++i) validate_sign(v[i], i);
  }
}

SwitchAssignment SwitchAssignment::all_ones(DimSpec dims) {
  return {dims, std::vector<std::vector<std::int8_t>>(dims.m(), std::vector<std::int8_t>(dims.n(), 1))};
}

SignTensor make_tensor(DimSpec dims, std::span<const int> entries) { return {dims, entries}; }

std::int64_t evaluate(const SignTensor& t, const SwitchAssignment& s) {
  require_same_dims(t.dims(), s.dims());
  std::vector<const std::vector<std::int8_t>*> ptrs;
  for (const auto& v : s.vectors()) ptrs.push_back(&v);
  return contract_except<std::int64_t>(t, std::nullopt, ptrs).front();
}

double evaluate(const SignTensor& t, std::span<const std::vector<double>> vectors) {
  require_vectors(t.dims(), vectors, t.dims().m());
  std::vector<const std::vector<double>*> ptrs;
  for (const auto& v : vectors) ptrs.push_back(&v);
  return contract_except<double>(t, std::nullopt, ptrs).front();
}

std::vector<std::int64_t> partial_contraction(const SignTensor& t, std::size_t axis,
                                              std::span<const std::vector<std::int8_t>> others) {
  return contract_except<std::int64_t>(t, axis, spread_others(t, axis, others));
}

std::vector<double> partial_contraction(const SignTensor& t, std::size_t axis,
                                        std::span<const std::vector<double>> others) {
  return contract_except<double>(t, axis, spread_others(t, axis, others));
}

std::vector<std::int64_t> partial_contraction(const SignTensor& t, std::size_t axis,
                                              const SwitchAssignment& s) {
  require_same_dims(t.dims(), s.dims());
  if (axis >= t.dims().m()) {
    throw Error(ErrorKind::AxisOutOfRange, "axis " + std::to_string(axis));
  }
  std::vector<const std::vector<std::int8_t>*> ptrs;
  for (const auto& v : s.vectors()) ptrs.push_back(&v);
  return contract_except<std::int64_t>(t, axis, ptrs);
}

SignTensor apply_switch(const SignTensor& t, const SwitchAssignment& s) {
  require_same_dims(t.dims(), s.dims());
  const DimSpec& dims = t.dims();
  std::vector<std::int8_t> out(t.entries().begin(), t.entries().end());
  // Multiply slice-wise: for axis k, entry flat gets x⁽ᵏ⁾ at its axis-k index.
  for (std::size_t k = 0; k < dims.m(); ++k) {
    const std::size_t stride = dims.stride(k);
    const auto x = s.axis(k);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
      out[flat] = static_cast<std::int8_t>(out[flat] * x[(flat / stride) % dims.n()]);
    }
  }
  return {dims, std::move(out)};
}

SignTensor permute_axes(const SignTensor& t, std::span<const std::size_t> perm) {
  return {t.dims(), permute_flat<std::int8_t>(t.dims(), t.entries(), perm)};
}

RealTensor permute_axes(const RealTensor& t, std::span<const std::size_t> perm) {
  return {t.dims, permute_flat<double>(t.dims, t.values, perm)};
}

SignTensor permute_indices(const SignTensor& t, std::size_t axis, std::span<const std::size_t> perm) {
  const DimSpec& dims = t.dims();
  const std::size_t stride = dims.stride(axis);
  if (perm.size() != dims.n()) throw Error(ErrorKind::DimMismatch, "index permutation has wrong length");
  std::vector<bool> seen(dims.n(), false);
  for (std::size_t i : perm) {
    if (i >= dims.n() || seen[i]) throw Error(ErrorKind::AxisOutOfRange, "not a permutation of indices");
    seen[i] = true;
  }
  std::vector<std::int8_t> out(dims.size());
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const std::size_t i = (flat / stride) % dims.n();
    out[flat] = t.entries()[flat + (perm[i] - i) * stride];
  }
  return {dims, std::move(out)};
}

double mixed_norm(const RealTensor& t, const MixedExponents& q) {
  const std::size_t m = t.dims.m();
  const std::size_t n = t.dims.n();
  if (q.q.size() != m) throw Error(ErrorKind::DimMismatch, "need one exponent per axis");
  for (double e : q.q) {
    if (!(e > 0.0)) throw Error(ErrorKind::InvalidExponent, "mixed-norm exponents must be > 0");
  }
  std::vector<double> buf = t.values;
  for (std::size_t d = m; d-- > 0;) {
    const std::size_t outer = buf.size() / n;
    std::vector<double> next(outer);
    for (std::size_t o = 0; o < outer; ++o) {
      next[o] = reduce_norm(std::span<const double>(buf).subspan(o * n, n), q.q[d]);
    }
    buf = std::move(next);
  }
  return buf.front();
}

double mixed_norm(const SignTensor& t, const MixedExponents& q) { return mixed_norm(RealTensor(t), q); }

}  // namespace gbswitch
