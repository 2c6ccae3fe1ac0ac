#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace forge::io {

// Little-endian append-only byte sink used by every file format writer.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void i8(std::int8_t v) { buf_.push_back(static_cast<std::uint8_t>(v)); }
  void u16(std::uint16_t v) { raw(&v, 2); }
  void u32(std::uint32_t v) { raw(&v, 4); }
  void i32(std::int32_t v) { raw(&v, 4); }
  void u64(std::uint64_t v) { raw(&v, 8); }
  void f32(float v) { raw(&v, 4); }
  void f64(double v) { raw(&v, 8); }
  void bytes(const std::uint8_t* p, std::size_t n) { raw(p, n); }
  void magic(const char tag[5]) { raw(tag, 4); }

  const std::vector<std::uint8_t>& data() const { return buf_; }

 private:
  void raw(const void* p, std::size_t n) {
    const auto* b = static_cast<const std::uint8_t*>(p);
    buf_.insert(buf_.end(), b, b + n);
  }
  std::vector<std::uint8_t> buf_;
};

// Bounds-checked little-endian reader; throws ConfigError on truncation.
class ByteReader {
 public:
  explicit ByteReader(std::vector<std::uint8_t> bytes)
      : buf_(std::move(bytes)) {}

  std::uint8_t u8() { return take<std::uint8_t>(); }
  std::int8_t i8() { return static_cast<std::int8_t>(take<std::uint8_t>()); }
  std::uint16_t u16() { return take<std::uint16_t>(); }
  std::uint32_t u32() { return take<std::uint32_t>(); }
  std::int32_t i32() { return take<std::int32_t>(); }
  std::uint64_t u64() { return take<std::uint64_t>(); }
  float f32() { return take<float>(); }
  double f64() { return take<double>(); }
  void bytes(std::uint8_t* out, std::size_t n);
  void expect_magic(const char tag[5]);
  bool done() const { return pos_ == buf_.size(); }

 private:
  template <typename T>
  T take() {
    T v;
    bytes_raw(&v, sizeof(T));
    return v;
  }
  void bytes_raw(void* out, std::size_t n);

  std::vector<std::uint8_t> buf_;
  std::size_t pos_ = 0;
};

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

// FNV-1a 64-bit; the content hash recorded for every artifact.
std::uint64_t fnv1a64(const std::uint8_t* p, std::size_t n);
std::uint64_t fnv1a64(const std::vector<std::uint8_t>& bytes);
std::uint64_t hash_file(const std::string& path);
std::string hash_hex(std::uint64_t h);

}  // namespace forge::io
