#pragma once

#include <filesystem>

#include "pdecomp/core/tensor.hpp"

// Binary array file format (extension .arr):
//   bytes 0..7   magic "PDCARRAY"
//   byte  8      format version (1)
//   bytes 9..16  rank, unsigned 64-bit little-endian
//   then rank dims, each unsigned 64-bit little-endian
//   then numel 32-bit little-endian IEEE floats, row-major
// Round-trips are bit-exact.

namespace pdecomp::io {

inline constexpr char kArrayMagic[8] = {'P', 'D', 'C', 'A', 'R', 'R', 'A', 'Y'};
inline constexpr uint8_t kArrayVersion = 1;

void write_array(const std::filesystem::path& path, const Tensor& t);
Tensor read_array(const std::filesystem::path& path);

// Serialize to / parse from an in-memory buffer (used by checkpoint archives).
void append_array(std::vector<char>& out, const Tensor& t);
Tensor consume_array(const char*& cursor, const char* end);

}  // namespace pdecomp::io
