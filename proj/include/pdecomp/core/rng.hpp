#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string_view>

#include "pdecomp/core/hash.hpp"

// Counter-based random numbers.
//
// Every draw is a pure function of (key, index). Keys are derived from a user
// seed by folding in integer or string tags, so any draw site in the codebase
// can be given its own substream that does not depend on program order. This
// is what makes sampling reproducible under batching changes and lets tests
// pin exact byte-level expectations.

namespace pdecomp::rng {

inline constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer.
constexpr uint64_t mix(uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr uint64_t derive(uint64_t key, uint64_t tag) {
  return mix(key ^ mix(tag));
}

constexpr uint64_t derive(uint64_t key, std::string_view tag) {
  return derive(key, fnv1a64(tag));
}

// Raw 64 uniform bits for draw `index` of stream `key`.
constexpr uint64_t bits(uint64_t key, uint64_t index) {
  return mix(key + index * kGolden);
}

// Uniform double in [0, 1).
inline double uniform(uint64_t key, uint64_t index) {
  return static_cast<double>(bits(key, index) >> 11) * 0x1.0p-53;
}

// Uniform double in [lo, hi).
inline double uniform(uint64_t key, uint64_t index, double lo, double hi) {
  return lo + (hi - lo) * uniform(key, index);
}

// Uniform integer in [0, n). Modulo bias is negligible for n << 2^64.
constexpr uint64_t uniform_int(uint64_t key, uint64_t index, uint64_t n) {
  return bits(key, index) % n;
}

// Standard normal via Box-Muller on the two 32-bit halves of one counter
// output. u1 is mapped into (0, 1] so the log never sees zero.
inline double normal(uint64_t key, uint64_t index) {
  const uint64_t r = bits(key, index);
  const double u1 = (static_cast<double>(r >> 32) + 1.0) * 0x1.0p-32;
  const double u2 = static_cast<double>(r & 0xFFFFFFFFull) * 0x1.0p-32;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

template <typename T>
void fill_normal(std::span<T> out, uint64_t key) {
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<T>(normal(key, i));
  }
}

template <typename T>
void fill_uniform(std::span<T> out, uint64_t key, double lo = 0.0,
                  double hi = 1.0) {
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<T>(uniform(key, i, lo, hi));
  }
}

// Sequential convenience wrapper over one substream.
class Stream {
 public:
  explicit Stream(uint64_t key) : key_(key) {}

  double normal() { return rng::normal(key_, counter_++); }
  double uniform() { return rng::uniform(key_, counter_++); }
  double uniform(double lo, double hi) {
    return rng::uniform(key_, counter_++, lo, hi);
  }
  uint64_t uniform_int(uint64_t n) {
    return rng::uniform_int(key_, counter_++, n);
  }

  uint64_t key() const { return key_; }
  uint64_t counter() const { return counter_; }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace pdecomp::rng
