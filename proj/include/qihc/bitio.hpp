#pragma once

// MSB-first bit packing. The first bit written lands in bit 7 of byte 0.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qihc/bit_string.hpp"

namespace qihc {

class BitWriter {
 public:
  void append(const BitString& bits);
  /// Appends the low `count` bits of `value`, high bit first. count <= 64.
  void append_bits(std::uint64_t value, unsigned count);
  void append_bit(bool bit);

  std::uint64_t bit_count() const noexcept { return bytes_.size() * 8 + pending_count_; }

  /// Flushes the partial byte (zero padded) and hands back the buffer.
  std::vector<std::uint8_t> finish() &&;

  /// Full bytes produced so far; useful for streaming the buffer out.
  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
  std::uint8_t pending_ = 0;
  unsigned pending_count_ = 0;
};

class BitReader {
 public:
  /// Reads at most `bit_limit` bits (default: every bit of `bytes`).
  explicit BitReader(std::span<const std::uint8_t> bytes);
  BitReader(std::span<const std::uint8_t> bytes, std::uint64_t bit_limit);

  /// Big-endian value of the next k bits (k <= 64). Throws truncation when
  /// fewer than k bits remain; the cursor is left untouched in that case.
  std::uint64_t take(unsigned k);
  bool take_bit();

  std::uint64_t position() const noexcept { return cursor_; }
  std::uint64_t remaining() const noexcept { return limit_ - cursor_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::uint64_t limit_;
  std::uint64_t cursor_ = 0;
};

}  // namespace qihc
