#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace qihc {

/// A finite sequence of bits, most significant (first transmitted) bit first.
class BitString {
 public:
  BitString() = default;

  /// Parses a string of '0'/'1' characters; anything else throws.
  static BitString from_string(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i] == '1'; }

  void push_back(bool bit) { bits_.push_back(bit ? '1' : '0'); }
  void pop_back() { bits_.pop_back(); }

  /// Binary increment of the value held in the string, width unchanged.
  /// Returns false (and leaves all zeros) when the value wraps around.
  bool increment();

  bool is_prefix_of(const BitString& other) const noexcept;

  /// Value of the bits as an unsigned integer; requires size() <= 64.
  std::uint64_t to_uint() const;

  const std::string& to_string() const noexcept { return bits_; }

  friend bool operator==(const BitString&, const BitString&) = default;
  /// Lexicographic order; a proper prefix sorts before its extensions.
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::string bits_;  // one '0'/'1' character per bit
};

BitString operator+(BitString lhs, bool bit);

}  // namespace qihc
