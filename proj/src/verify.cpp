#include "qihc/verify.hpp"

#include <algorithm>
#include <numeric>

#include "qihc/container.hpp"
#include "qihc/direct_map.hpp"
#include "qihc/errors.hpp"
#include "qihc/huffman.hpp"
#include "qihc/qstate.hpp"

namespace qihc {

const std::vector<std::vector<std::string>>& reference_uniform_codes() {
  static const std::vector<std::vector<std::string>> table{
      {"0", "1"},
      {"0", "10", "11"},
      {"00", "01", "10", "11"},
      {"00", "01", "10", "110", "111"},
      {"00", "01", "100", "101", "110", "111"},
      {"00", "010", "011", "100", "101", "110", "111"},
      {"000", "001", "010", "011", "100", "101", "110", "111"},
      {"000", "001", "010", "011", "100", "101", "110", "1110", "1111"},
  };
  return table;
}

namespace {

std::vector<BitString> sorted_code_set(const Codebook& book) {
  std::vector<BitString> out;
  out.reserve(book.size());
  for (const auto& e : book.entries()) out.push_back(e.code);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

VerifyReport verify_range(std::uint64_t max_n, std::uint64_t qstate_cap) {
  if (max_n < 2) throw Error(ErrorKind::usage, "--max-n must be at least 2");
  if (max_n > kMaxMaterializedAlphabet) {
    throw Error(ErrorKind::too_large, "--max-n is capped at 2^20");
  }
  VerifyReport report;
  report.n_range = {2, max_n};
  report.checked_properties = {"direct-vs-huffman-lengths", "kraft-equality", "prefix-free",
                               "non-singular", "reference-table", "last-small-code-growth",
                               "qstate-vs-direct"};
  auto fail = [&](std::uint64_t n, std::string what) {
    report.failures.emplace_back(n, std::move(what));
  };

  const auto& table = reference_uniform_codes();
  Codebook previous;
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    const auto book = direct_codebook(n);

    std::vector<std::size_t> lengths;
    lengths.reserve(n);
    for (const auto& e : book.entries()) lengths.push_back(e.code.size());
    std::sort(lengths.begin(), lengths.end());
    if (lengths != leaf_depths(build_tree(SymbolDistribution::uniform(n)))) {
      fail(n, "code lengths differ from uniform Huffman tree depths");
    }
    if (kraft_sum(book) != 1) fail(n, "Kraft sum is not exactly 1");
    if (!is_prefix_free(book)) fail(n, "codebook is not prefix-free");
    if (!is_non_singular(book)) fail(n, "codebook is singular");

    if (n - 2 < table.size()) {
      for (std::uint64_t i = 0; i < n; ++i) {
        if (book.at(i).to_string() != table[n - 2][i]) {
          fail(n, "symbol " + std::to_string(i) + " differs from the reference table");
        }
      }
    }

    if (n >= 3) {
      const auto c_sl = last_small_code(previous);
      auto expected = sorted_code_set(previous);
      std::erase(expected, c_sl);
      expected.push_back(c_sl + false);
      expected.push_back(c_sl + true);
      std::sort(expected.begin(), expected.end());
      if (expected != sorted_code_set(book)) {
        fail(n, "code set is not the previous set with its last small code split");
      }
    }

    if (n <= qstate_cap) {
      const auto state = build_state(n);
      const auto params = code_params(n);
      for (std::uint64_t i = 0; i < n; ++i) {
        if (qstate_encode(state, i) != direct_encode(params, i)) {
          fail(n, "state encoder disagrees with direct map at symbol " + std::to_string(i));
          break;
        }
      }
      if (n <= UINT32_MAX) {
        std::vector<std::uint32_t> all(n);
        std::iota(all.begin(), all.end(), 0U);
        const auto width = static_cast<std::uint8_t>(n <= 256 ? 1 : (n <= 65536 ? 2 : 4));
        const auto n32 = static_cast<std::uint32_t>(n);
        if (compress_uniform(n32, all, width, UniformEncoder::direct) !=
            compress_uniform(n32, all, width, UniformEncoder::qstate)) {
          fail(n, "direct and state containers differ");
        }
      }
    }
    previous = book;
  }
  return report;
}

}  // namespace qihc
