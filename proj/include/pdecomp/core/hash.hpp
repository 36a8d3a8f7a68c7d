#pragma once

#include <cstdint>
#include <string_view>

namespace pdecomp {

// FNV-1a 64-bit. Used for content provenance stamps and for deriving RNG
// subkeys from string tags. Not cryptographic; collisions are acceptable for
// provenance but would be bugs in RNG tags, so tags are kept short and fixed.
constexpr uint64_t fnv1a64(std::string_view bytes,
                           uint64_t seed = 0xCBF29CE484222325ull) {
  uint64_t h = seed;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

inline uint64_t fnv1a64(const void* data, size_t n,
                        uint64_t seed = 0xCBF29CE484222325ull) {
  return fnv1a64(
      std::string_view(static_cast<const char*>(data), n), seed);
}

}  // namespace pdecomp
