#include "qihc/direct_map.hpp"

#include <bit>

#include "qihc/errors.hpp"

namespace qihc {

CodeParams code_params(std::uint64_t n) {
  if (n < 2 || n > kMaxAlphabet) {
    throw Error(ErrorKind::unsupported_alphabet,
                "alphabet size must be in [2, 2^32], got " + std::to_string(n));
  }
  CodeParams p;
  p.n = n;
  p.lower = static_cast<unsigned>(std::bit_width(n) - 1);
  p.upper = std::has_single_bit(n) ? p.lower : p.lower + 1;
  p.diff = 2 * (n - (std::uint64_t{1} << p.lower));
  return p;
}

BitString binary_fixed(std::uint64_t numb, unsigned len) {
  if (len > 64 || (len < 64 && numb >> len != 0)) {
    throw Error(ErrorKind::overflow, std::to_string(numb) + " does not fit in " +
                                         std::to_string(len) + " bits");
  }
  BitString out;
  for (unsigned i = len; i-- > 0;) out.push_back(((numb >> i) & 1U) != 0);
  return out;
}

namespace {

struct Codeword {
  std::uint64_t value;
  unsigned width;
};

Codeword direct_codeword(const CodeParams& p, std::uint64_t numb) {
  if (numb >= p.n) {
    throw Error(ErrorKind::invalid_symbol, "symbol " + std::to_string(numb) +
                                               " outside alphabet of size " +
                                               std::to_string(p.n));
  }
  // The first disjunct is implied by the second whenever diff == 0; both are
  // kept to mirror the published algorithm.
  if (p.lower == p.upper || numb <= p.last_short_symbol()) return {numb, p.lower};
  return {(std::uint64_t{1} << p.upper) + numb - p.n, p.upper};
}

}  // namespace

BitString direct_encode(const CodeParams& p, std::uint64_t numb, OpCounters* counters) {
  const auto cw = direct_codeword(p, numb);
  if (counters) counters->bits_emitted += cw.width;
  return binary_fixed(cw.value, cw.width);
}

void direct_encode_into(const CodeParams& p, std::uint64_t numb, BitWriter& out) {
  const auto cw = direct_codeword(p, numb);
  out.append_bits(cw.value, cw.width);
}

std::uint64_t direct_decode(const CodeParams& p, BitReader& reader) {
  const std::uint64_t v = reader.take(p.lower);
  if (p.lower == p.upper || v <= p.last_short_symbol()) {
    if (v >= p.n) throw Error(ErrorKind::corruption, "decoded symbol outside alphabet");
    return v;
  }
  const std::uint64_t w = 2 * v + static_cast<std::uint64_t>(reader.take_bit());
  const std::uint64_t symbol = w - (std::uint64_t{1} << p.upper) + p.n;
  if (symbol >= p.n) throw Error(ErrorKind::corruption, "decoded symbol outside alphabet");
  return symbol;
}

Codebook direct_codebook(std::uint64_t n) {
  const auto p = code_params(n);
  if (n > kMaxMaterializedAlphabet) {
    throw Error(ErrorKind::too_large, "codebook materialization is capped at 2^20 symbols");
  }
  std::vector<CodeEntry> entries;
  entries.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) entries.push_back({i, direct_encode(p, i)});
  return Codebook(std::move(entries));
}

BitString last_small_code(const Codebook& book) {
  if (book.size() == 0) throw Error(ErrorKind::structural, "empty codebook");
  const BitString* best = nullptr;
  for (const auto& e : book.entries()) {
    if (best == nullptr || e.code.size() < best->size() ||
        (e.code.size() == best->size() && *best < e.code)) {
      best = &e.code;
    }
  }
  return *best;
}

}  // namespace qihc
