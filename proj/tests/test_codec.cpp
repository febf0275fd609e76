#include <cmath>
#include <random>

#include "doctest.h"
#include "qihc/bitio.hpp"
#include "qihc/container.hpp"
#include "qihc/direct_map.hpp"
#include "qihc/errors.hpp"

using namespace qihc;
using Bytes = std::vector<std::uint8_t>;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::usage;
}

Bytes payload_of(const Bytes& container) {
  const auto size = parse_header(container).size;
  return Bytes(container.begin() + static_cast<std::ptrdiff_t>(size), container.end());
}

}  // namespace

TEST_CASE("bit writer") {
  BitWriter w;
  w.append(BitString::from_string("110"));
  w.append(BitString::from_string("10"));
  CHECK(w.bit_count() == 5);
  CHECK(std::move(w).finish() == Bytes{0xD0});

  BitWriter empty;
  empty.append(BitString{});
  CHECK(empty.bit_count() == 0);
  CHECK(std::move(empty).finish().empty());

  BitWriter ones;
  ones.append(BitString::from_string("11111111"));
  CHECK(std::move(ones).finish() == Bytes{0xFF});

  BitWriter wide;
  wide.append_bits(0x1234, 16);
  wide.append_bits(1, 1);
  CHECK(std::move(wide).finish() == Bytes{0x12, 0x34, 0x80});
}

TEST_CASE("bit reader") {
  const Bytes d0{0xD0};
  BitReader r(d0);
  CHECK(r.take(0) == 0);
  CHECK(r.position() == 0);
  CHECK(r.take(3) == 6);
  CHECK(r.position() == 3);

  const Bytes ff{0xFF};
  BitReader all(ff);
  CHECK(all.take(8) == 255);
  CHECK(kind_of([&] { all.take(1); }) == ErrorKind::truncation);

  BitReader limited(ff, 4);
  CHECK(kind_of([&] { limited.take(5); }) == ErrorKind::truncation);
  CHECK(limited.position() == 0);
  CHECK(limited.take(4) == 15);
}

TEST_CASE("header serialization") {
  ContainerHeader h;
  h.mode = ContainerMode::uniform;
  h.n = 5;
  h.symbol_width = 1;
  h.symbol_count = 2;
  const Bytes expected{0x51, 0x49, 0x48, 0x43, 0x01, 0x00, 0x05, 0x00, 0x00, 0x00,
                       0x01, 0x02, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00};
  CHECK(emit_header(h) == expected);
  const auto parsed = parse_header(expected);
  CHECK(parsed.header == h);
  CHECK(parsed.size == expected.size());

  auto bad_version = expected;
  bad_version[4] = 0x02;
  CHECK(kind_of([&] { parse_header(bad_version); }) == ErrorKind::format);
  auto bad_mode = expected;
  bad_mode[5] = 0x07;
  CHECK(kind_of([&] { parse_header(bad_mode); }) == ErrorKind::format);
  auto bad_width = expected;
  bad_width[10] = 3;
  CHECK(kind_of([&] { parse_header(bad_width); }) == ErrorKind::format);
  auto small_n = expected;
  small_n[6] = 1;
  CHECK(kind_of([&] { parse_header(small_n); }) == ErrorKind::corrupt_header);
  auto wide_n = expected;
  wide_n[7] = 0x01;  // n = 261 with one-byte symbols
  CHECK(kind_of([&] { parse_header(wide_n); }) == ErrorKind::corrupt_header);
  CHECK(kind_of([&] { parse_header(Bytes(expected.begin(), expected.end() - 1)); }) ==
        ErrorKind::format);
}

TEST_CASE("header round trip on random valid headers") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    ContainerHeader h;
    h.symbol_count = rng();
    if (trial % 2 == 0) {
      h.mode = ContainerMode::uniform;
      const std::uint8_t widths[] = {1, 2, 4};
      h.symbol_width = widths[rng() % 3];
      const std::uint64_t cap = h.symbol_width == 4 ? UINT32_MAX : (1ULL << (8 * h.symbol_width));
      h.n = static_cast<std::uint32_t>(2 + rng() % (cap - 1));
    } else {
      h.mode = ContainerMode::bytes;
      // A complete canonical table from a random Huffman book.
      Bytes sample(1 + rng() % 500);
      for (auto& b : sample) b = static_cast<std::uint8_t>(rng() % (1 + rng() % 256));
      const auto c = compress_bytes(sample);
      h.lengths = parse_header(c).header.lengths;
    }
    const auto bytes = emit_header(h);
    CHECK(parse_header(bytes).header == h);
  }
}

TEST_CASE("uniform compress examples") {
  const std::vector<std::uint32_t> two{2, 3};
  const auto c = compress_uniform(5, two);
  CHECK(c.size() == 20);
  CHECK(payload_of(c) == Bytes{0xB0});
  CHECK(parse_header(c).header.n == 5);
  CHECK(parse_header(c).header.symbol_count == 2);
  CHECK(compress_uniform(5, two, 1, UniformEncoder::qstate) == c);
  CHECK(decompress(c).symbols == two);

  const std::vector<std::uint32_t> four{0, 1, 2, 3};
  CHECK(payload_of(compress_uniform(4, four)) == Bytes{0x1B});

  CHECK(kind_of([&] { compress_uniform(5, std::vector<std::uint32_t>{5}); }) ==
        ErrorKind::invalid_symbol);
  CHECK(kind_of([&] { compress_uniform(300, two, 1); }) == ErrorKind::unsupported_alphabet);
}

TEST_CASE("empty input") {
  const auto c = compress_uniform(7, std::vector<std::uint32_t>{});
  CHECK(payload_of(c).empty());
  CHECK(decompress(c).symbols.empty());
  const auto b = compress_bytes(Bytes{});
  CHECK(payload_of(b).empty());
  CHECK(decompress(b).symbols.empty());
}

TEST_CASE("single repeated byte") {
  const Bytes same(1000, 0x41);
  const auto c = compress_bytes(same);
  const auto h = parse_header(c).header;
  int present = 0;
  for (std::size_t b = 0; b < 256; ++b) present += h.lengths[b] != 0;
  CHECK(present == 1);
  CHECK(h.lengths[0x41] == 1);
  CHECK(payload_of(c).size() == 125);  // 1000 bits
  const auto d = decompress(c).symbols;
  CHECK(d.size() == 1000);
  CHECK(std::all_of(d.begin(), d.end(), [](auto s) { return s == 0x41; }));
}

TEST_CASE("decompress rejects malformed containers") {
  auto c = compress_uniform(5, std::vector<std::uint32_t>{2, 3});
  auto bad_magic = c;
  std::copy_n("XXXX", 4, bad_magic.begin());
  CHECK(kind_of([&] { decompress(bad_magic); }) == ErrorKind::format);

  auto truncated = c;
  truncated.pop_back();
  CHECK(kind_of([&] { decompress(truncated); }) == ErrorKind::truncation);

  auto more_symbols = c;
  more_symbols[11] = 9;  // more symbols than the payload has bits
  CHECK(kind_of([&] { decompress(more_symbols); }) == ErrorKind::truncation);

  auto trailing = c;
  trailing.push_back(0);
  CHECK(kind_of([&] { decompress(trailing); }) == ErrorKind::format);

  auto dirty_padding = c;
  dirty_padding.back() |= 0x01;
  CHECK(kind_of([&] { decompress(dirty_padding); }) == ErrorKind::corruption);

  auto bytes_mode = compress_bytes(Bytes{1, 2, 3, 3});
  auto kraft = bytes_mode;
  kraft[6 + 1] = 1;  // byte 1 now claims a one-bit code too
  CHECK(kind_of([&] { decompress(kraft); }) == ErrorKind::corrupt_header);
}

TEST_CASE("any single corrupted header byte is caught or keeps the symbol count") {
  std::mt19937_64 rng(99);
  std::vector<std::uint32_t> symbols(40);
  for (auto& s : symbols) s = static_cast<std::uint32_t>(rng() % 13);
  Bytes raw(300);
  for (auto& b : raw) b = static_cast<std::uint8_t>(rng() % 20);
  for (const auto& c : {compress_uniform(13, symbols), compress_bytes(raw)}) {
    const auto header_size = parse_header(c).size;
    for (std::size_t at = 0; at < header_size; ++at) {
      for (std::uint8_t flip : {0x01, 0x80, 0xFF}) {
        auto broken = c;
        broken[at] ^= flip;
        try {
          const auto d = decompress(broken);
          CHECK(d.symbols.size() == d.header.symbol_count);
        } catch (const Error&) {
        }
      }
    }
  }
}

TEST_CASE("uniform round trips and the size law") {
  std::mt19937_64 rng(42);
  for (std::uint32_t n : {2U, 3U, 5U, 100U, 1000U, 65536U, 70000U, 4294967295U}) {
    const std::uint8_t width = n <= 256 ? 1 : (n <= 65536 ? 2 : 4);
    std::vector<std::uint32_t> symbols(5000);
    for (auto& s : symbols) s = static_cast<std::uint32_t>(rng() % n);
    const auto c = compress_uniform(n, symbols, width);
    const auto d = decompress(c);
    REQUIRE(d.symbols == symbols);
    CHECK(d.header.symbol_width == width);

    const auto p = code_params(n);
    std::uint64_t bits = 0;
    for (auto s : symbols) bits += (s <= p.last_short_symbol()) ? p.lower : p.upper;
    CHECK(payload_of(c).size() == (bits + 7) / 8);
  }
}

TEST_CASE("byte round trips and the source-coding bound") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    Bytes raw(1 + rng() % 4000);
    const auto spread = 1 + rng() % 256;
    for (auto& b : raw) b = static_cast<std::uint8_t>(std::min<std::uint64_t>(rng() % spread, rng() % 256));
    const auto c = compress_bytes(raw);
    const auto d = decompress(c);
    REQUIRE(Bytes(d.symbols.begin(), d.symbols.end()) == raw);

    std::array<std::uint64_t, 256> counts{};
    for (auto b : raw) ++counts[b];
    double h = 0;
    std::uint64_t bits = 0;
    const auto lengths = parse_header(c).header.lengths;
    int present = 0;
    for (std::size_t b = 0; b < 256; ++b) {
      if (counts[b] == 0) continue;
      ++present;
      const double p = static_cast<double>(counts[b]) / static_cast<double>(raw.size());
      h -= p * std::log2(p);
      bits += counts[b] * lengths[b];
    }
    const double per_symbol = static_cast<double>(bits) / static_cast<double>(raw.size());
    CHECK(h <= per_symbol + 1e-12);
    if (present > 1) CHECK(per_symbol < h + 1.0);
  }
}

TEST_CASE("symbol packing") {
  const std::vector<std::uint32_t> s{1, 258, 65535};
  CHECK(pack_symbols(s, 2) == Bytes{0x01, 0x00, 0x02, 0x01, 0xFF, 0xFF});
  CHECK(unpack_symbols(pack_symbols(s, 4), 4) == s);
  CHECK_THROWS_AS(pack_symbols(s, 1), Error);
  CHECK_THROWS_AS(unpack_symbols(Bytes{1, 2, 3}, 2), Error);
}
