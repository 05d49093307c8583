#include "gbswitch/rng.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "gbswitch/parallel.hpp"

namespace gbswitch {

SignTensor random_sign_tensor(DimSpec dims, std::uint64_t seed) {
  SignSource source(seed);
  return {dims, source.vector(dims.size())};
}

std::size_t worker_count() {
  if (const char* env = std::getenv("GB_THREADS"); env != nullptr) {
    try {
      const long value = std::stol(env);
      if (value >= 1) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
      // Fall through to the hardware default.
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

}  // namespace gbswitch
