#ifndef MTSI_IO_HPP
#define MTSI_IO_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtsi/types.hpp"

namespace mtsi {

/// Parse failure in a binary or CSV payload; `offset` is the byte position
/// at which the problem was detected.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// MTSR v1 recording container, little-endian:
///   'MTSR' | u16 version=1 | u32 V | u32 T | u8 flags(bit0: truth block)
///   | V*3 f32 coords | V*T f64 values (NaN = missing) | V*T u8 mask
///   | [V*T f64 truth]
MaskedRecording read_recording(const std::string& path);
void write_recording(const MaskedRecording& rec, const std::string& path);

/// CSV import with header `voxel,x,y,z,t0..t{T-1}`; empty cell = missing.
MaskedRecording read_recording_csv(const std::string& path);

// Little-endian wire helpers shared by the model artifact formats.
namespace wire {

class Writer {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u16(std::uint16_t v);
  void u32(std::uint32_t v);
  void f32(float v);
  void f64(double v);
  void magic(const char tag[4]);
  const std::vector<std::uint8_t>& bytes() const { return buf_; }
  void to_file(const std::string& path) const;

 private:
  std::vector<std::uint8_t> buf_;
};

class Reader {
 public:
  explicit Reader(std::vector<std::uint8_t> bytes) : buf_(std::move(bytes)) {}
  static Reader from_file(const std::string& path);

  std::uint8_t u8();
  std::uint16_t u16();
  std::uint32_t u32();
  float f32();
  double f64();
  void expect_magic(const char tag[4], const std::string& format_name);
  std::size_t offset() const { return at_; }
  std::size_t remaining() const { return buf_.size() - at_; }
  void expect_exhausted();

 private:
  void need(std::size_t n);
  std::vector<std::uint8_t> buf_;
  std::size_t at_ = 0;
};

}  // namespace wire

}  // namespace mtsi

#endif  // MTSI_IO_HPP
