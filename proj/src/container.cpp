#include "qihc/container.hpp"

#include <algorithm>

#include "qihc/bitio.hpp"
#include "qihc/direct_map.hpp"
#include "qihc/errors.hpp"
#include "qihc/qstate.hpp"

namespace qihc {

namespace {

void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t at, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(in[at + i]) << (8 * i);
  return v;
}

bool valid_width(std::uint8_t w) { return w == 1 || w == 2 || w == 4; }

// Symbols below n must be representable in `width` raw bytes.
bool width_fits(std::uint64_t n, std::uint8_t width) {
  return width == 4 || n <= (std::uint64_t{1} << (8 * width));
}

void check_length_table(const std::array<std::uint8_t, 256>& lengths, std::uint64_t count) {
  std::vector<std::size_t> present;
  for (auto l : lengths) {
    if (l != 0) present.push_back(l);
  }
  if (present.empty()) {
    if (count != 0) throw Error(ErrorKind::corrupt_header, "symbols declared but no codes present");
    return;
  }
  const auto kraft = kraft_sum(present);
  if (present.size() == 1) {
    if (present.front() != 1) {
      throw Error(ErrorKind::corrupt_header, "lone symbol must have a one-bit code");
    }
  } else if (kraft != 1) {
    throw Error(ErrorKind::corrupt_header, "length table violates the Kraft equality");
  }
}

}  // namespace

std::vector<std::uint8_t> emit_header(const ContainerHeader& h) {
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.push_back(kVersion);
  out.push_back(static_cast<std::uint8_t>(h.mode));
  if (h.mode == ContainerMode::uniform) {
    put_le(out, h.n, 4);
    out.push_back(h.symbol_width);
  } else {
    out.insert(out.end(), h.lengths.begin(), h.lengths.end());
  }
  put_le(out, h.symbol_count, 8);
  return out;
}

ParsedHeader parse_header(std::span<const std::uint8_t> bytes) {
  auto need = [&](std::size_t size) {
    if (bytes.size() < size) throw Error(ErrorKind::format, "container header is truncated");
  };
  need(6);
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw Error(ErrorKind::format, "bad magic");
  }
  if (bytes[4] != kVersion) throw Error(ErrorKind::format, "unsupported version");

  ParsedHeader parsed{};
  auto& h = parsed.header;
  std::size_t at = 6;
  switch (bytes[5]) {
    case 0x00: {
      h.mode = ContainerMode::uniform;
      need(at + 5 + 8);
      h.n = static_cast<std::uint32_t>(get_le(bytes, at, 4));
      h.symbol_width = bytes[at + 4];
      at += 5;
      if (!valid_width(h.symbol_width)) throw Error(ErrorKind::format, "bad symbol width");
      if (h.n < 2) throw Error(ErrorKind::corrupt_header, "alphabet size below 2");
      if (!width_fits(h.n, h.symbol_width)) {
        throw Error(ErrorKind::corrupt_header, "alphabet does not fit the symbol width");
      }
      break;
    }
    case 0x01: {
      h.mode = ContainerMode::bytes;
      need(at + 256 + 8);
      std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(at), 256, h.lengths.begin());
      at += 256;
      break;
    }
    default:
      throw Error(ErrorKind::format, "unknown mode");
  }
  h.symbol_count = get_le(bytes, at, 8);
  at += 8;
  if (h.mode == ContainerMode::bytes) check_length_table(h.lengths, h.symbol_count);
  parsed.size = at;
  return parsed;
}

Codebook codebook_from_lengths(const std::array<std::uint8_t, 256>& lengths) {
  std::vector<std::pair<Symbol, std::size_t>> pairs;
  for (std::size_t b = 0; b < lengths.size(); ++b) {
    if (lengths[b] != 0) pairs.emplace_back(b, lengths[b]);
  }
  return canonical_from_lengths(pairs);
}

std::vector<std::uint8_t> compress_uniform(std::uint32_t n, std::span<const std::uint32_t> symbols,
                                           std::uint8_t symbol_width, UniformEncoder encoder) {
  const auto params = code_params(n);
  if (!valid_width(symbol_width) || !width_fits(n, symbol_width)) {
    throw Error(ErrorKind::unsupported_alphabet, "symbol width cannot hold the alphabet");
  }
  ContainerHeader h;
  h.mode = ContainerMode::uniform;
  h.n = n;
  h.symbol_width = symbol_width;
  h.symbol_count = symbols.size();

  BitWriter payload;
  if (encoder == UniformEncoder::direct) {
    for (auto s : symbols) direct_encode_into(params, s, payload);
  } else {
    const auto state = build_state(n);
    for (auto s : symbols) payload.append(qstate_encode(state, s));
  }
  auto out = emit_header(h);
  const auto body = std::move(payload).finish();
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

std::vector<std::uint8_t> compress_bytes(std::span<const std::uint8_t> input) {
  ContainerHeader h;
  h.mode = ContainerMode::bytes;
  h.symbol_count = input.size();

  std::vector<std::uint8_t> out;
  if (input.empty()) return emit_header(h);

  std::array<Frequency, 256> counts{};
  for (auto b : input) ++counts[b];
  const auto book = huffman_codebook(SymbolDistribution::from_counts(counts));
  for (const auto& e : book.entries()) {
    if (e.code.size() > 255) throw Error(ErrorKind::overflow, "code length exceeds 255 bits");
    h.lengths[e.symbol] = static_cast<std::uint8_t>(e.code.size());
  }
  std::array<const BitString*, 256> lookup{};
  for (const auto& e : book.entries()) lookup[e.symbol] = &e.code;

  BitWriter payload;
  for (auto b : input) payload.append(*lookup[b]);
  out = emit_header(h);
  const auto body = std::move(payload).finish();
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

namespace {

// Canonical decoding tracks only the offset of the running code from the
// first code of the current length, so arbitrarily long codes fit in 64 bits.
class CanonicalDecoder {
 public:
  explicit CanonicalDecoder(const std::array<std::uint8_t, 256>& lengths) {
    for (std::size_t b = 0; b < lengths.size(); ++b) {
      if (lengths[b] != 0) {
        ++count_[lengths[b]];
        max_len_ = std::max<unsigned>(max_len_, lengths[b]);
      }
    }
    std::vector<std::pair<std::uint8_t, std::uint8_t>> order;
    for (std::size_t b = 0; b < lengths.size(); ++b) {
      if (lengths[b] != 0) order.emplace_back(lengths[b], static_cast<std::uint8_t>(b));
    }
    std::sort(order.begin(), order.end());
    for (const auto& [len, sym] : order) sorted_.push_back(sym);
  }

  std::uint8_t decode(BitReader& reader) const {
    std::uint64_t offset = 0;  // code - first code of this length
    std::size_t index = 0;
    for (unsigned len = 1; len <= max_len_; ++len) {
      offset |= static_cast<std::uint64_t>(reader.take_bit());
      const auto count = count_[len];
      if (offset < count) return sorted_[index + offset];
      index += count;
      offset = (offset - count) << 1;
    }
    throw Error(ErrorKind::corruption, "bit pattern matches no code");
  }

 private:
  std::array<std::uint64_t, 256> count_{};
  unsigned max_len_ = 0;
  std::vector<std::uint8_t> sorted_;
};

}  // namespace

DecodedStream decompress(std::span<const std::uint8_t> container) {
  const auto parsed = parse_header(container);
  DecodedStream out{parsed.header, {}};
  const auto payload = container.subspan(parsed.size);
  const auto& h = parsed.header;

  // Every codeword is at least one bit long.
  if (h.symbol_count > static_cast<std::uint64_t>(payload.size()) * 8) {
    throw Error(ErrorKind::truncation, "payload too short for the declared symbol count");
  }
  out.symbols.reserve(h.symbol_count);
  BitReader reader(payload);
  if (h.mode == ContainerMode::uniform) {
    const auto params = code_params(h.n);
    for (std::uint64_t i = 0; i < h.symbol_count; ++i) {
      out.symbols.push_back(static_cast<std::uint32_t>(direct_decode(params, reader)));
    }
  } else if (h.symbol_count > 0) {
    const CanonicalDecoder decoder(h.lengths);
    for (std::uint64_t i = 0; i < h.symbol_count; ++i) out.symbols.push_back(decoder.decode(reader));
  }

  const auto used_bytes = (reader.position() + 7) / 8;
  if (used_bytes != payload.size()) throw Error(ErrorKind::format, "trailing bytes after payload");
  if (reader.remaining() > 0 && reader.take(static_cast<unsigned>(reader.remaining())) != 0) {
    throw Error(ErrorKind::corruption, "nonzero padding bits");
  }
  return out;
}

std::vector<std::uint8_t> pack_symbols(std::span<const std::uint32_t> symbols, std::uint8_t width) {
  if (!valid_width(width)) throw Error(ErrorKind::usage, "symbol width must be 1, 2 or 4");
  std::vector<std::uint8_t> out;
  out.reserve(symbols.size() * width);
  for (auto s : symbols) {
    if (width < 4 && (s >> (8 * width)) != 0) {
      throw Error(ErrorKind::overflow, "symbol does not fit the symbol width");
    }
    put_le(out, s, width);
  }
  return out;
}

std::vector<std::uint32_t> unpack_symbols(std::span<const std::uint8_t> raw, std::uint8_t width) {
  if (!valid_width(width)) throw Error(ErrorKind::usage, "symbol width must be 1, 2 or 4");
  if (raw.size() % width != 0) {
    throw Error(ErrorKind::format, "input length is not a multiple of the symbol width");
  }
  std::vector<std::uint32_t> out;
  out.reserve(raw.size() / width);
  for (std::size_t at = 0; at < raw.size(); at += width) {
    out.push_back(static_cast<std::uint32_t>(get_le(raw, at, width)));
  }
  return out;
}

}  // namespace qihc
