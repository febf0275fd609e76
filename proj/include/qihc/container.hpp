#pragma once

// On-disk container:
//   "QIHC" | version 0x01 | mode
//   mode 0 (uniform): n (u32 LE) | symbol width (1, 2 or 4)
//   mode 1 (bytes):   256 canonical code lengths, 0 = byte absent
//   symbol count (u64 LE) | payload bits, MSB first, zero padded

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qihc/huffman.hpp"

namespace qihc {

inline constexpr std::array<std::uint8_t, 4> kMagic{0x51, 0x49, 0x48, 0x43};
inline constexpr std::uint8_t kVersion = 0x01;

enum class ContainerMode : std::uint8_t { uniform = 0x00, bytes = 0x01 };

/// Which encoder fills a uniform-mode payload; both yield identical bits.
enum class UniformEncoder { direct, qstate };

struct ContainerHeader {
  ContainerMode mode = ContainerMode::uniform;
  std::uint32_t n = 0;               // uniform mode
  std::uint8_t symbol_width = 1;     // uniform mode
  std::array<std::uint8_t, 256> lengths{};  // bytes mode
  std::uint64_t symbol_count = 0;

  friend bool operator==(const ContainerHeader&, const ContainerHeader&) = default;
};

std::vector<std::uint8_t> emit_header(const ContainerHeader& h);

struct ParsedHeader {
  ContainerHeader header;
  std::size_t size;  // bytes consumed
};

/// Throws format on bad magic/version/mode/width or short input, and
/// corrupt_header on an invalid alphabet size or length table.
ParsedHeader parse_header(std::span<const std::uint8_t> bytes);

/// Canonical byte codebook described by a length table.
Codebook codebook_from_lengths(const std::array<std::uint8_t, 256>& lengths);

std::vector<std::uint8_t> compress_uniform(std::uint32_t n, std::span<const std::uint32_t> symbols,
                                           std::uint8_t symbol_width = 1,
                                           UniformEncoder encoder = UniformEncoder::direct);

std::vector<std::uint8_t> compress_bytes(std::span<const std::uint8_t> input);

struct DecodedStream {
  ContainerHeader header;
  std::vector<std::uint32_t> symbols;
};

DecodedStream decompress(std::span<const std::uint8_t> container);

/// Little-endian packing of symbols at the given width, and its inverse.
std::vector<std::uint8_t> pack_symbols(std::span<const std::uint32_t> symbols, std::uint8_t width);
std::vector<std::uint32_t> unpack_symbols(std::span<const std::uint8_t> raw, std::uint8_t width);

}  // namespace qihc
