#pragma once

// Classical Huffman coding over integer frequency counts: tree construction,
// code extraction, canonical re-assignment, and code-class predicates.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qihc/bit_string.hpp"
#include "qihc/op_counters.hpp"

namespace qihc {

using Symbol = std::uint64_t;
using Frequency = std::uint64_t;
using Rational = boost::multiprecision::cpp_rational;

struct SymbolFrequency {
  Symbol symbol;
  Frequency freq;
};

/// Symbols with exact nonnegative counts. Probabilities are freq / total().
class SymbolDistribution {
 public:
  /// Throws invalid_distribution on duplicate symbols or an all-zero table,
  /// overflow when the total does not fit in 64 bits.
  explicit SymbolDistribution(std::vector<SymbolFrequency> entries);

  /// Symbols 0..counts.size()-1 with the given counts.
  static SymbolDistribution from_counts(std::span<const Frequency> counts);
  static SymbolDistribution uniform(std::size_t n);

  /// Entries in ascending symbol order.
  const std::vector<SymbolFrequency>& entries() const noexcept { return entries_; }
  Frequency total() const noexcept { return total_; }
  std::size_t nonzero_count() const noexcept;
  std::optional<Frequency> frequency_of(Symbol s) const;

  /// Exact normalized probability of a symbol (0 if absent).
  Rational probability(Symbol s) const;

 private:
  std::vector<SymbolFrequency> entries_;
  Frequency total_ = 0;
};

using NodeId = std::uint32_t;

struct HuffmanNode {
  Frequency freq = 0;
  std::optional<NodeId> parent;
  std::optional<NodeId> left;
  std::optional<NodeId> right;
  std::optional<Symbol> symbol;

  bool is_leaf() const noexcept { return !left && !right; }
};

struct HuffmanTree {
  std::vector<HuffmanNode> nodes;
  NodeId root = 0;
};

/// One symbol's code.
struct CodeEntry {
  Symbol symbol;
  BitString code;
};

/// Mapping from symbols to nonempty codes, kept sorted by symbol.
class Codebook {
 public:
  Codebook() = default;
  /// Throws structural on duplicate symbols or empty codes.
  explicit Codebook(std::vector<CodeEntry> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<CodeEntry>& entries() const noexcept { return entries_; }
  const BitString* find(Symbol s) const;
  const BitString& at(Symbol s) const;

  /// Code lengths keyed by symbol, in symbol order.
  std::vector<std::pair<Symbol, std::size_t>> lengths() const;
  std::size_t max_length() const noexcept;

  friend bool operator==(const Codebook& a, const Codebook& b);

 private:
  std::vector<CodeEntry> entries_;
};

/// -sum p lg p in bits per symbol, with 0 lg 0 = 0.
double entropy(const SymbolDistribution& dist);

/// sum p(x) l(x). Throws incomplete_codebook if a nonzero symbol has no code.
double expected_length(const SymbolDistribution& dist, const Codebook& book);

/// Merges the two lowest-frequency parentless nodes until one remains. Ties
/// go to the earlier-created node; leaves are created in symbol order and
/// parents appended after them. Zero-frequency symbols get no leaf.
HuffmanTree build_tree(const SymbolDistribution& dist, OpCounters* counters = nullptr);

/// Checks the structural tree invariants; throws structural on violation.
void validate_tree(const HuffmanTree& tree);

/// Leaf-to-root walk per leaf, 0 for left and 1 for right, reversed.
/// A single-leaf tree yields the one-bit code "0".
Codebook codes_from_tree(const HuffmanTree& tree, OpCounters* counters = nullptr);

/// Leaf depths in ascending order (1 for a lone root leaf).
std::vector<std::size_t> leaf_depths(const HuffmanTree& tree);

/// Canonical assignment: symbols sorted by (length, symbol) receive
/// increasing code values. Throws infeasible_lengths when the Kraft sum
/// exceeds one or a length is zero.
Codebook canonical_from_lengths(std::span<const std::pair<Symbol, std::size_t>> lengths);

/// Huffman lengths re-assigned canonically.
Codebook huffman_codebook(const SymbolDistribution& dist, OpCounters* counters = nullptr);

bool is_prefix_free(const Codebook& book);
bool is_non_singular(const Codebook& book);

/// Exact sum of 2^-l over all codes.
Rational kraft_sum(const Codebook& book);
Rational kraft_sum(std::span<const std::size_t> lengths);

struct OptimalityReport {
  bool monotone_ok = false;
  bool longest_pair_ok = false;
  bool sibling_pair_ok = false;

  bool all() const noexcept { return monotone_ok && longest_pair_ok && sibling_pair_ok; }
};

/// Checks the three structural properties some optimal prefix code always
/// has: frequency-monotone lengths, a tied longest pair, and a longest pair
/// differing only in the final bit.
OptimalityReport optimality_report(const SymbolDistribution& dist, const Codebook& book);

}  // namespace qihc
