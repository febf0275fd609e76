#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qihc {

struct VerifyReport {
  std::pair<std::uint64_t, std::uint64_t> n_range{0, 0};
  std::vector<std::pair<std::uint64_t, std::string>> failures;
  std::vector<std::string> checked_properties;

  bool ok() const noexcept { return failures.empty(); }
};

/// Published uniform-alphabet Huffman codes for n = 2..9, index 0 is n = 2.
const std::vector<std::vector<std::string>>& reference_uniform_codes();

/// Runs the uniform-alphabet invariant suites for every n in [2, max_n]:
/// direct lengths vs. Huffman tree depths, Kraft equality, prefix freedom,
/// the reference table for n <= 9, last-small-code growth, and (for
/// n <= qstate_cap) symbol-by-symbol and container equality of the state
/// encoder with the direct map. Throws usage when max_n < 2.
VerifyReport verify_range(std::uint64_t max_n, std::uint64_t qstate_cap = 1024);

}  // namespace qihc
