#include "qihc/bit_string.hpp"

#include <algorithm>

#include "qihc/errors.hpp"

namespace qihc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_distribution: return "invalid-distribution";
    case ErrorKind::incomplete_codebook: return "incomplete-codebook";
    case ErrorKind::infeasible_lengths: return "infeasible-lengths";
    case ErrorKind::structural: return "structural";
    case ErrorKind::unsupported_alphabet: return "unsupported-alphabet";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::invalid_symbol: return "invalid-symbol";
    case ErrorKind::truncation: return "truncation";
    case ErrorKind::corruption: return "corruption";
    case ErrorKind::internal_corruption: return "internal-corruption";
    case ErrorKind::too_large: return "too-large";
    case ErrorKind::format: return "format";
    case ErrorKind::corrupt_header: return "corrupt-header";
    case ErrorKind::io: return "io";
    case ErrorKind::usage: return "usage";
  }
  return "unknown";
}

BitString BitString::from_string(std::string_view text) {
  BitString out;
  out.bits_.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::format, "bit string may only contain '0' and '1'");
    }
    out.bits_.push_back(c);
  }
  return out;
}

bool BitString::increment() {
  for (std::size_t i = bits_.size(); i-- > 0;) {
    if (bits_[i] == '0') {
      bits_[i] = '1';
      return true;
    }
    bits_[i] = '0';
  }
  return false;
}

bool BitString::is_prefix_of(const BitString& other) const noexcept {
  return other.bits_.starts_with(bits_);
}

std::uint64_t BitString::to_uint() const {
  if (bits_.size() > 64) {
    throw Error(ErrorKind::overflow, "bit string longer than 64 bits");
  }
  std::uint64_t v = 0;
  for (char b : bits_) v = (v << 1) | static_cast<std::uint64_t>(b == '1');
  return v;
}

BitString operator+(BitString lhs, bool bit) {
  lhs.push_back(bit);
  return lhs;
}

}  // namespace qihc
