#pragma once

// Closed-form Huffman codes for n equally likely symbols. Such an alphabet
// uses only two code lengths, floor(lg n) and ceil(lg n); the long codes are
// the top `diff` values of the ceil(lg n)-bit range.

#include <cstdint>

#include "qihc/bit_string.hpp"
#include "qihc/bitio.hpp"
#include "qihc/huffman.hpp"
#include "qihc/op_counters.hpp"

namespace qihc {

inline constexpr std::uint64_t kMaxAlphabet = std::uint64_t{1} << 32;
inline constexpr std::uint64_t kMaxMaterializedAlphabet = std::uint64_t{1} << 20;

struct CodeParams {
  std::uint64_t n = 0;
  unsigned lower = 0;   // floor(lg n)
  unsigned upper = 0;   // ceil(lg n)
  std::uint64_t diff = 0;  // number of codewords of length `upper`

  /// Largest symbol that receives a short (`lower`-bit) code.
  std::uint64_t last_short_symbol() const noexcept { return n - 1 - diff; }

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Integer-only computation; throws unsupported_alphabet unless 2 <= n <= 2^32.
CodeParams code_params(std::uint64_t n);

/// `len`-bit big-endian representation of `numb`, zero padded on the left.
/// Throws overflow when numb >= 2^len.
BitString binary_fixed(std::uint64_t numb, unsigned len);

BitString direct_encode(const CodeParams& p, std::uint64_t numb, OpCounters* counters = nullptr);

/// Same as direct_encode, written straight into a bit writer.
void direct_encode_into(const CodeParams& p, std::uint64_t numb, BitWriter& out);

/// Reads exactly one codeword. Throws truncation on a short stream and
/// corruption when the decoded value is not a symbol.
std::uint64_t direct_decode(const CodeParams& p, BitReader& reader);

/// Every symbol's code, n <= 2^20.
Codebook direct_codebook(std::uint64_t n);

/// Lexicographically largest code among those of minimum length.
BitString last_small_code(const Codebook& book);

}  // namespace qihc
