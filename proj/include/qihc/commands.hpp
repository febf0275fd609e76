#pragma once

// Implementations behind the `qihc` subcommands. Each writes its report to
// `out` and returns the process exit status; failures surface as qihc::Error.

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qihc/huffman.hpp"

namespace qihc {

int cmd_table(std::uint64_t n, bool json, std::ostream& out);
int cmd_params(std::uint64_t n, std::ostream& out);
int cmd_state(std::uint64_t n, bool dense, std::ostream& out);
int cmd_verify(std::uint64_t max_n, std::ostream& out);
int cmd_bench(const std::vector<std::uint64_t>& ns, const std::string& mode,
              const std::optional<std::string>& csv_path, std::ostream& out);
int cmd_entropy(const std::string& freq_path, std::ostream& out);

struct EncodeOptions {
  std::string mode;  // direct | tree | qstate
  std::optional<std::uint64_t> n;
  std::string in_path;
  std::string out_path;
  std::uint8_t symbol_width = 1;
};

int cmd_encode(const EncodeOptions& opts, std::ostream& out);
int cmd_decode(const std::string& in_path, const std::string& out_path, std::ostream& out);

/// Parses "symbol count" lines. Counts may be integers or decimals; decimal
/// counts are scaled to a common integer denominator, so ratios stay exact.
SymbolDistribution parse_frequency_table(std::istream& in);

/// Parses "n1,n2,..." into integers; throws usage on malformed input.
std::vector<std::uint64_t> parse_n_list(const std::string& text);

}  // namespace qihc
