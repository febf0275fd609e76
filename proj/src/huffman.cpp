#include "qihc/huffman.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "qihc/errors.hpp"

namespace qihc {

SymbolDistribution::SymbolDistribution(std::vector<SymbolFrequency> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return a.symbol < b.symbol; });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].symbol == entries_[i - 1].symbol) {
      throw Error(ErrorKind::invalid_distribution, "duplicate symbol in distribution");
    }
  }
  for (const auto& e : entries_) {
    if (e.freq > UINT64_MAX - total_) {
      throw Error(ErrorKind::overflow, "total frequency exceeds 64 bits");
    }
    total_ += e.freq;
  }
  if (total_ == 0) {
    throw Error(ErrorKind::invalid_distribution, "all frequencies are zero");
  }
}

SymbolDistribution SymbolDistribution::from_counts(std::span<const Frequency> counts) {
  std::vector<SymbolFrequency> entries;
  entries.reserve(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) entries.push_back({i, counts[i]});
  return SymbolDistribution(std::move(entries));
}

SymbolDistribution SymbolDistribution::uniform(std::size_t n) {
  std::vector<Frequency> counts(n, 1);
  return from_counts(counts);
}

std::size_t SymbolDistribution::nonzero_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const auto& e) { return e.freq > 0; }));
}

std::optional<Frequency> SymbolDistribution::frequency_of(Symbol s) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                             [](const auto& e, Symbol v) { return e.symbol < v; });
  if (it == entries_.end() || it->symbol != s) return std::nullopt;
  return it->freq;
}

Rational SymbolDistribution::probability(Symbol s) const {
  auto f = frequency_of(s).value_or(0);
  return Rational(boost::multiprecision::cpp_int(f), boost::multiprecision::cpp_int(total_));
}

Codebook::Codebook(std::vector<CodeEntry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return a.symbol < b.symbol; });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].code.empty()) {
      throw Error(ErrorKind::structural, "codebook entries must be nonempty");
    }
    if (i > 0 && entries_[i].symbol == entries_[i - 1].symbol) {
      throw Error(ErrorKind::structural, "duplicate symbol in codebook");
    }
  }
}

const BitString* Codebook::find(Symbol s) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                             [](const auto& e, Symbol v) { return e.symbol < v; });
  if (it == entries_.end() || it->symbol != s) return nullptr;
  return &it->code;
}

const BitString& Codebook::at(Symbol s) const {
  if (const auto* code = find(s)) return *code;
  throw Error(ErrorKind::invalid_symbol, "symbol " + std::to_string(s) + " has no code");
}

std::vector<std::pair<Symbol, std::size_t>> Codebook::lengths() const {
  std::vector<std::pair<Symbol, std::size_t>> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.emplace_back(e.symbol, e.code.size());
  return out;
}

std::size_t Codebook::max_length() const noexcept {
  std::size_t m = 0;
  for (const auto& e : entries_) m = std::max(m, e.code.size());
  return m;
}

bool operator==(const Codebook& a, const Codebook& b) {
  return std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                    b.entries_.end(), [](const auto& x, const auto& y) {
                      return x.symbol == y.symbol && x.code == y.code;
                    });
}

double entropy(const SymbolDistribution& dist) {
  const double total = static_cast<double>(dist.total());
  double h = 0.0;
  for (const auto& e : dist.entries()) {
    if (e.freq == 0) continue;
    const double p = static_cast<double>(e.freq) / total;
    h -= p * std::log2(p);
  }
  return h;
}

double expected_length(const SymbolDistribution& dist, const Codebook& book) {
  const double total = static_cast<double>(dist.total());
  double sum = 0.0;
  for (const auto& e : dist.entries()) {
    if (e.freq == 0) continue;
    const auto* code = book.find(e.symbol);
    if (code == nullptr) {
      throw Error(ErrorKind::incomplete_codebook,
                  "no code for symbol " + std::to_string(e.symbol));
    }
    sum += static_cast<double>(e.freq) / total * static_cast<double>(code->size());
  }
  return sum;
}

HuffmanTree build_tree(const SymbolDistribution& dist, OpCounters* counters) {
  HuffmanTree tree;
  for (const auto& e : dist.entries()) {
    if (e.freq == 0) continue;
    HuffmanNode leaf;
    leaf.freq = e.freq;
    leaf.symbol = e.symbol;
    tree.nodes.push_back(leaf);
  }
  if (tree.nodes.empty()) {
    throw Error(ErrorKind::invalid_distribution, "no symbol has nonzero frequency");
  }
  if (tree.nodes.size() > (UINT32_MAX / 2)) {
    throw Error(ErrorKind::too_large, "alphabet too large for a tree");
  }

  // Min-heap on (frequency, creation order).
  using Key = std::pair<Frequency, NodeId>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> open;
  for (NodeId id = 0; id < tree.nodes.size(); ++id) open.emplace(tree.nodes[id].freq, id);

  while (open.size() > 1) {
    const auto [f0, a] = open.top();
    open.pop();
    const auto [f1, b] = open.top();
    open.pop();
    const auto parent = static_cast<NodeId>(tree.nodes.size());
    HuffmanNode node;
    node.freq = f0 + f1;
    node.left = a;
    node.right = b;
    tree.nodes.push_back(node);
    tree.nodes[a].parent = parent;
    tree.nodes[b].parent = parent;
    open.emplace(node.freq, parent);
    if (counters) ++counters->tree_merges;
  }
  tree.root = open.top().second;
  return tree;
}

void validate_tree(const HuffmanTree& tree) {
  const auto count = tree.nodes.size();
  if (count == 0 || tree.root >= count) {
    throw Error(ErrorKind::structural, "tree has no valid root");
  }
  if (tree.nodes[tree.root].parent) {
    throw Error(ErrorKind::structural, "root has a parent");
  }
  std::vector<int> parent_refs(count, 0);
  for (NodeId id = 0; id < count; ++id) {
    const auto& node = tree.nodes[id];
    if (node.left.has_value() != node.right.has_value()) {
      throw Error(ErrorKind::structural, "internal node with one child");
    }
    if (node.is_leaf()) {
      if (!node.symbol || node.freq == 0) {
        throw Error(ErrorKind::structural, "leaf without symbol or with zero frequency");
      }
      continue;
    }
    if (node.symbol) throw Error(ErrorKind::structural, "internal node carries a symbol");
    for (NodeId child : {*node.left, *node.right}) {
      if (child >= count || tree.nodes[child].parent != id) {
        throw Error(ErrorKind::structural, "child/parent links disagree");
      }
      ++parent_refs[child];
    }
    if (tree.nodes[*node.left].freq + tree.nodes[*node.right].freq != node.freq) {
      throw Error(ErrorKind::structural, "internal frequency is not the sum of its children");
    }
  }
  for (NodeId id = 0; id < count; ++id) {
    if (id != tree.root && parent_refs[id] != 1) {
      throw Error(ErrorKind::structural, "node is orphaned or shared");
    }
  }
}

namespace {

// Walks parent links from a leaf, bounded by the node count so a cycle is
// reported instead of looping forever. Returns the bits leaf-to-root.
BitString walk_to_root(const HuffmanTree& tree, NodeId leaf, OpCounters* counters) {
  BitString reversed;
  NodeId cur = leaf;
  std::size_t steps = 0;
  while (cur != tree.root) {
    const auto& node = tree.nodes[cur];
    if (!node.parent || *node.parent >= tree.nodes.size()) {
      throw Error(ErrorKind::structural, "orphan node below root");
    }
    if (++steps > tree.nodes.size()) throw Error(ErrorKind::structural, "cycle in tree");
    const auto& parent = tree.nodes[*node.parent];
    if (parent.left == cur) {
      reversed.push_back(false);
    } else if (parent.right == cur) {
      reversed.push_back(true);
    } else {
      throw Error(ErrorKind::structural, "parent does not list node as a child");
    }
    cur = *node.parent;
  }
  if (counters) counters->tree_walk_steps += steps;
  return reversed;
}

}  // namespace

Codebook codes_from_tree(const HuffmanTree& tree, OpCounters* counters) {
  if (tree.nodes.empty() || tree.root >= tree.nodes.size()) {
    throw Error(ErrorKind::structural, "tree has no valid root");
  }
  const auto& root = tree.nodes[tree.root];
  if (root.is_leaf()) {
    if (!root.symbol) throw Error(ErrorKind::structural, "leaf without symbol");
    return Codebook({{*root.symbol, BitString::from_string("0")}});
  }
  std::vector<CodeEntry> entries;
  for (NodeId id = 0; id < tree.nodes.size(); ++id) {
    const auto& node = tree.nodes[id];
    if (!node.is_leaf()) continue;
    if (!node.symbol) throw Error(ErrorKind::structural, "leaf without symbol");
    BitString bits = walk_to_root(tree, id, counters);
    BitString code;
    for (std::size_t i = bits.size(); i-- > 0;) code.push_back(bits[i]);
    entries.push_back({*node.symbol, std::move(code)});
  }
  return Codebook(std::move(entries));
}

std::vector<std::size_t> leaf_depths(const HuffmanTree& tree) {
  // Parents always follow their children, so depths resolve top-down.
  std::vector<std::size_t> depth(tree.nodes.size(), 0);
  std::vector<std::size_t> out;
  if (tree.nodes.size() == 1) return {1};
  for (std::size_t i = tree.nodes.size(); i-- > 0;) {
    const auto& node = tree.nodes[i];
    if (node.parent) depth[i] = depth[*node.parent] + 1;
    if (node.is_leaf()) out.push_back(depth[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational kraft_sum(std::span<const std::size_t> lengths) {
  using boost::multiprecision::cpp_int;
  std::size_t lmax = 0;
  for (auto l : lengths) lmax = std::max(lmax, l);
  cpp_int numerator = 0;
  for (auto l : lengths) numerator += cpp_int(1) << (lmax - l);
  return Rational(numerator, cpp_int(1) << lmax);
}

Rational kraft_sum(const Codebook& book) {
  std::vector<std::size_t> lengths;
  lengths.reserve(book.size());
  for (const auto& e : book.entries()) lengths.push_back(e.code.size());
  return kraft_sum(lengths);
}

Codebook canonical_from_lengths(std::span<const std::pair<Symbol, std::size_t>> lengths) {
  std::vector<std::pair<std::size_t, Symbol>> order;
  order.reserve(lengths.size());
  std::vector<std::size_t> just_lengths;
  just_lengths.reserve(lengths.size());
  for (const auto& [symbol, len] : lengths) {
    if (len == 0) throw Error(ErrorKind::infeasible_lengths, "code length must be positive");
    order.emplace_back(len, symbol);
    just_lengths.push_back(len);
  }
  if (kraft_sum(just_lengths) > 1) {
    throw Error(ErrorKind::infeasible_lengths, "Kraft sum exceeds one");
  }
  std::sort(order.begin(), order.end());

  std::vector<CodeEntry> entries;
  entries.reserve(order.size());
  BitString code;
  bool first = true;
  for (const auto& [len, symbol] : order) {
    if (!first) code.increment();
    first = false;
    while (code.size() < len) code.push_back(false);
    entries.push_back({symbol, code});
  }
  return Codebook(std::move(entries));
}

Codebook huffman_codebook(const SymbolDistribution& dist, OpCounters* counters) {
  const auto raw = codes_from_tree(build_tree(dist, counters), counters);
  const auto lengths = raw.lengths();
  return canonical_from_lengths(lengths);
}

namespace {

std::vector<BitString> sorted_codes(const Codebook& book) {
  std::vector<BitString> codes;
  codes.reserve(book.size());
  for (const auto& e : book.entries()) codes.push_back(e.code);
  std::sort(codes.begin(), codes.end());
  return codes;
}

}  // namespace

bool is_prefix_free(const Codebook& book) {
  // In lexicographic order any prefix is immediately followed by an extension.
  const auto codes = sorted_codes(book);
  for (std::size_t i = 1; i < codes.size(); ++i) {
    if (codes[i - 1].is_prefix_of(codes[i])) return false;
  }
  return true;
}

bool is_non_singular(const Codebook& book) {
  const auto codes = sorted_codes(book);
  return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

OptimalityReport optimality_report(const SymbolDistribution& dist, const Codebook& book) {
  std::vector<std::pair<Frequency, const BitString*>> coded;
  for (const auto& e : dist.entries()) {
    if (e.freq == 0) continue;
    const auto* code = book.find(e.symbol);
    if (code == nullptr) {
      throw Error(ErrorKind::incomplete_codebook,
                  "no code for symbol " + std::to_string(e.symbol));
    }
    coded.emplace_back(e.freq, code);
  }

  OptimalityReport report;

  // Walk frequency groups from most to least frequent; every strictly more
  // frequent group must be no longer than the current one.
  std::sort(coded.begin(), coded.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  report.monotone_ok = true;
  std::size_t longest_above = 0;
  for (std::size_t i = 0; i < coded.size();) {
    std::size_t j = i;
    std::size_t shortest = SIZE_MAX;
    std::size_t longest = 0;
    for (; j < coded.size() && coded[j].first == coded[i].first; ++j) {
      shortest = std::min(shortest, coded[j].second->size());
      longest = std::max(longest, coded[j].second->size());
    }
    if (i > 0 && longest_above > shortest) report.monotone_ok = false;
    longest_above = std::max(longest_above, longest);
    i = j;
  }

  std::size_t lmax = 0;
  for (const auto& c : coded) lmax = std::max(lmax, c.second->size());
  std::map<BitString, int> stems;  // bit 0 set: stem+0 seen; bit 1 set: stem+1 seen
  std::size_t at_max = 0;
  for (const auto& c : coded) {
    if (c.second->size() != lmax) continue;
    ++at_max;
    BitString stem = *c.second;
    const bool last = stem[stem.size() - 1];
    stem.pop_back();
    stems[stem] |= last ? 2 : 1;
  }
  report.longest_pair_ok = at_max >= 2;
  report.sibling_pair_ok =
      std::any_of(stems.begin(), stems.end(), [](const auto& kv) { return kv.second == 3; });
  return report;
}

}  // namespace qihc
