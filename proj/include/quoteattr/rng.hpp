#pragma once

// SplitMix64-based generator. std::mt19937 output is portable but the
// standard distributions are not, and exported datasets must be
// byte-identical across platforms, so bounded draws are done by hand.

#include <cstdint>
#include <string_view>
#include <vector>

namespace quoteattr {

std::uint64_t fnv1a64(std::string_view s);

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  // Stream derived from a base seed and a provenance label, so any
  // instance can be regenerated in isolation.
  static SplitMix64 for_instance(std::uint64_t seed, std::string_view provenance) {
    return SplitMix64(seed ^ (fnv1a64(provenance) | 1));
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return next_double() < p;
  }

  // Uniform in [0, n) by 128-bit multiply; n must be > 0.
  std::uint64_t uniform(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<__uint128_t>(next_u64()) * static_cast<__uint128_t>(n)) >> 64);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace quoteattr
