#include "pdecomp/core/array_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "pdecomp/core/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "array format assumes a little-endian host");

namespace pdecomp::io {

namespace {

void put_u64(std::vector<char>& out, uint64_t v) {
  char buf[8];
  std::memcpy(buf, &v, 8);
  out.insert(out.end(), buf, buf + 8);
}

uint64_t take_u64(const char*& cursor, const char* end) {
  if (end - cursor < 8) throw IoError("array data truncated");
  uint64_t v;
  std::memcpy(&v, cursor, 8);
  cursor += 8;
  return v;
}

}  // namespace

void append_array(std::vector<char>& out, const Tensor& t) {
  out.insert(out.end(), kArrayMagic, kArrayMagic + 8);
  out.push_back(static_cast<char>(kArrayVersion));
  put_u64(out, static_cast<uint64_t>(t.rank()));
  for (int64_t d : t.shape()) put_u64(out, static_cast<uint64_t>(d));
  const char* bytes = reinterpret_cast<const char*>(t.data());
  out.insert(out.end(), bytes, bytes + t.numel() * sizeof(float));
}

Tensor consume_array(const char*& cursor, const char* end) {
  if (end - cursor < 9) throw IoError("array data truncated");
  if (std::memcmp(cursor, kArrayMagic, 8) != 0) {
    throw IoError("bad array magic");
  }
  cursor += 8;
  const uint8_t version = static_cast<uint8_t>(*cursor++);
  if (version != kArrayVersion) {
    throw IoError("unsupported array version " + std::to_string(version));
  }
  const uint64_t rank = take_u64(cursor, end);
  if (rank > 8) throw IoError("implausible array rank");
  std::vector<int64_t> shape(rank);
  for (auto& d : shape) d = static_cast<int64_t>(take_u64(cursor, end));
  Tensor t(shape);
  const int64_t nbytes = t.numel() * static_cast<int64_t>(sizeof(float));
  if (end - cursor < nbytes) throw IoError("array data truncated");
  std::memcpy(t.data(), cursor, nbytes);
  cursor += nbytes;
  return t;
}

void write_array(const std::filesystem::path& path, const Tensor& t) {
  std::vector<char> buf;
  buf.reserve(32 + t.numel() * sizeof(float));
  append_array(buf, t);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for write: " + path.string());
  f.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!f) throw IoError("write failed: " + path.string());
}

Tensor read_array(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary | std::ios::ate);
  if (!f) throw IoError("cannot open: " + path.string());
  const auto size = static_cast<size_t>(f.tellg());
  f.seekg(0);
  std::vector<char> buf(size);
  f.read(buf.data(), static_cast<std::streamsize>(size));
  if (!f) throw IoError("read failed: " + path.string());
  const char* cursor = buf.data();
  Tensor t = consume_array(cursor, buf.data() + size);
  if (cursor != buf.data() + size) {
    throw IoError("trailing bytes in array file: " + path.string());
  }
  return t;
}

}  // namespace pdecomp::io
