#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "gbswitch/tensor.hpp"

namespace gbswitch {

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Derives a sub-stream seed from a base seed and a path of indices
/// (e.g. {n, sample}). Fixed forever: changing it changes every experiment.
constexpr std::uint64_t mix_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> path) noexcept {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t part : path) h = splitmix64(h ^ splitmix64(part + 0x632BE59BD9B4E019ULL));
  return h;
}

/// Uniform ±1 draws from raw mt19937_64 output bits. The engine's output
/// sequence is fixed by the standard, so draws are identical on every
/// platform (distribution objects are avoided for that reason).
class SignSource {
 public:
  explicit SignSource(std::uint64_t seed) : engine_(seed) {}

  std::int8_t next() {
    if (remaining_ == 0) {
      bits_ = engine_();
      remaining_ = 64;
    }
    const auto bit = static_cast<std::int8_t>(bits_ & 1U);
    bits_ >>= 1;
    --remaining_;
    return bit ? std::int8_t{-1} : std::int8_t{1};
  }

  std::vector<std::int8_t> vector(std::size_t n) {
    std::vector<std::int8_t> out(n);
    for (auto& v : out) v = next();
    return out;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t bits_ = 0;
  int remaining_ = 0;
};

/// Uniform i.i.d. sign tensor drawn from `seed`.
SignTensor random_sign_tensor(DimSpec dims, std::uint64_t seed);

}  // namespace gbswitch
