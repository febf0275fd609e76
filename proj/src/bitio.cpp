#include "qihc/bitio.hpp"

#include <algorithm>

#include "qihc/errors.hpp"

namespace qihc {

void BitWriter::append_bit(bool bit) {
  pending_ = static_cast<std::uint8_t>((pending_ << 1) | (bit ? 1 : 0));
  if (++pending_count_ == 8) {
    bytes_.push_back(pending_);
    pending_ = 0;
    pending_count_ = 0;
  }
}

void BitWriter::append(const BitString& bits) {
  for (std::size_t i = 0; i < bits.size(); ++i) append_bit(bits[i]);
}

void BitWriter::append_bits(std::uint64_t value, unsigned count) {
  if (count > 64) throw Error(ErrorKind::overflow, "cannot append more than 64 bits at once");
  while (count > 0) {
    --count;
    append_bit(((value >> count) & 1U) != 0);
  }
}

std::vector<std::uint8_t> BitWriter::finish() && {
  if (pending_count_ > 0) {
    bytes_.push_back(static_cast<std::uint8_t>(pending_ << (8 - pending_count_)));
    pending_ = 0;
    pending_count_ = 0;
  }
  return std::move(bytes_);
}

BitReader::BitReader(std::span<const std::uint8_t> bytes)
    : bytes_(bytes), limit_(static_cast<std::uint64_t>(bytes.size()) * 8) {}

BitReader::BitReader(std::span<const std::uint8_t> bytes, std::uint64_t bit_limit)
    : bytes_(bytes),
      limit_(std::min<std::uint64_t>(bit_limit, static_cast<std::uint64_t>(bytes.size()) * 8)) {}

bool BitReader::take_bit() {
  if (cursor_ >= limit_) throw Error(ErrorKind::truncation, "bit stream exhausted");
  const auto byte = bytes_[cursor_ >> 3];
  const bool bit = ((byte >> (7 - (cursor_ & 7))) & 1U) != 0;
  ++cursor_;
  return bit;
}

std::uint64_t BitReader::take(unsigned k) {
  if (k > 64) throw Error(ErrorKind::overflow, "cannot take more than 64 bits at once");
  if (remaining() < k) throw Error(ErrorKind::truncation, "bit stream exhausted mid-value");
  std::uint64_t v = 0;
  for (unsigned i = 0; i < k; ++i) v = (v << 1) | static_cast<std::uint64_t>(take_bit());
  return v;
}

}  // namespace qihc
