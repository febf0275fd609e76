#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qihc/errors.hpp"
#include "qihc/huffman.hpp"

using namespace qihc;

namespace {

Codebook book_of(std::initializer_list<const char*> codes) {
  std::vector<CodeEntry> entries;
  Symbol s = 0;
  for (const char* c : codes) entries.push_back({s++, BitString::from_string(c)});
  return Codebook(std::move(entries));
}

std::vector<std::string> strings_of(const Codebook& book) {
  std::vector<std::string> out;
  for (const auto& e : book.entries()) out.push_back(e.code.to_string());
  return out;
}

// Five-symbol example distribution (0.25, 0.25, 0.2, 0.15, 0.15) as counts.
const std::vector<Frequency> kFiveCounts{25, 25, 20, 15, 15};

}  // namespace

TEST_CASE("distribution rejects all-zero and duplicate input") {
  CHECK_THROWS_AS(SymbolDistribution::from_counts(std::vector<Frequency>{0, 0}), Error);
  CHECK_THROWS_AS(SymbolDistribution({{1, 2}, {1, 3}}), Error);
  const auto d = SymbolDistribution({{7, 1}, {3, 3}});
  CHECK(d.entries().front().symbol == 3);
  CHECK(d.probability(3) + d.probability(7) == 1);
}

TEST_CASE("entropy") {
  const auto five = SymbolDistribution::from_counts(kFiveCounts);
  const double oracle = oracle::entropy_sum({0.25, 0.25, 0.2, 0.15, 0.15});
  CHECK(oracle == doctest::Approx(2.2854752972273342).epsilon(1e-15));
  CHECK(std::abs(entropy(five) - oracle) < 1e-12);
  CHECK(entropy(SymbolDistribution::from_counts(std::vector<Frequency>{1})) == 0.0);
  CHECK(entropy(SymbolDistribution::uniform(2)) == 1.0);
  // Zero-frequency entries contribute nothing.
  CHECK(entropy(SymbolDistribution::from_counts(std::vector<Frequency>{1, 0, 1})) == 1.0);
}

TEST_CASE("expected length") {
  const auto five = SymbolDistribution::from_counts(kFiveCounts);
  CHECK(std::abs(expected_length(five, book_of({"00", "10", "11", "010", "011"})) - 2.3) < 1e-12);
  CHECK(expected_length(SymbolDistribution::uniform(2), book_of({"0", "1"})) == 1.0);
  CHECK(expected_length(SymbolDistribution::uniform(4), book_of({"00", "01", "10", "11"})) == 2.0);
  try {
    expected_length(five, book_of({"0", "1"}));
    FAIL("expected incomplete_codebook");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::incomplete_codebook);
  }
}

TEST_CASE("build_tree") {
  SUBCASE("two leaves") {
    const auto t = build_tree(SymbolDistribution::uniform(2));
    validate_tree(t);
    CHECK(t.nodes.size() == 3);
    CHECK(t.nodes[t.root].freq == 2);
    CHECK(t.nodes[t.root].left == 0u);
    CHECK(t.nodes[t.root].right == 1u);
  }
  SUBCASE("five-symbol example depths") {
    const auto t = build_tree(SymbolDistribution::from_counts(kFiveCounts));
    validate_tree(t);
    CHECK(leaf_depths(t) == std::vector<std::size_t>{2, 2, 2, 3, 3});
  }
  SUBCASE("uniform five") {
    CHECK(leaf_depths(build_tree(SymbolDistribution::uniform(5))) ==
          std::vector<std::size_t>{2, 2, 2, 3, 3});
  }
  SUBCASE("zero-frequency symbols get no leaf") {
    const auto t = build_tree(SymbolDistribution::from_counts(std::vector<Frequency>{3, 0, 1, 1}));
    CHECK(t.nodes.size() == 5);
    const auto book = codes_from_tree(t);
    CHECK(book.find(1) == nullptr);
    CHECK(book.size() == 3);
  }
  SUBCASE("counters") {
    OpCounters c;
    build_tree(SymbolDistribution::uniform(37), &c);
    CHECK(c.tree_merges == 36);
  }
}

TEST_CASE("build_tree matches the pass-by-pass oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + rng() % 40;
    std::vector<Frequency> counts(k);
    for (auto& c : counts) c = 1 + rng() % (trial % 2 ? 5 : 1000);
    const auto tree = build_tree(SymbolDistribution::from_counts(counts));
    const auto book = codes_from_tree(tree);
    const auto naive = oracle::naive_huffman_depths(counts);
    // Same tie rule, so the per-symbol depths agree exactly.
    for (std::size_t s = 0; s < k; ++s) CHECK(book.at(s).size() == naive[s]);
  }
}

TEST_CASE("codes_from_tree") {
  const auto two = codes_from_tree(build_tree(SymbolDistribution::uniform(2)));
  CHECK(strings_of(two) == std::vector<std::string>{"0", "1"});

  const auto five = codes_from_tree(build_tree(SymbolDistribution::from_counts(kFiveCounts)));
  CHECK(is_prefix_free(five));
  auto lengths = five.lengths();
  std::vector<std::size_t> ls;
  for (auto [s, l] : lengths) ls.push_back(l);
  std::sort(ls.begin(), ls.end());
  CHECK(ls == std::vector<std::size_t>{2, 2, 2, 3, 3});

  auto four = strings_of(codes_from_tree(build_tree(SymbolDistribution::uniform(4))));
  std::sort(four.begin(), four.end());
  CHECK(four == std::vector<std::string>{"00", "01", "10", "11"});

  SUBCASE("single symbol gets a one-bit code") {
    const auto one = codes_from_tree(build_tree(SymbolDistribution({{42, 9}})));
    CHECK(one.size() == 1);
    CHECK(one.at(42).to_string() == "0");
  }
  SUBCASE("malformed trees are rejected") {
    auto t = build_tree(SymbolDistribution::uniform(3));
    auto cyclic = t;
    cyclic.nodes[cyclic.root].parent = 0;
    cyclic.nodes[0].parent = cyclic.root;
    CHECK_THROWS_AS(validate_tree(cyclic), Error);
    auto orphan = t;
    orphan.nodes[0].parent.reset();
    CHECK_THROWS_AS(codes_from_tree(orphan), Error);
    CHECK_THROWS_AS(validate_tree(orphan), Error);
  }
}

TEST_CASE("canonical_from_lengths") {
  using L = std::vector<std::pair<Symbol, std::size_t>>;
  CHECK(strings_of(canonical_from_lengths(L{{0, 1}, {1, 2}, {2, 2}})) ==
        std::vector<std::string>{"0", "10", "11"});
  CHECK(strings_of(canonical_from_lengths(L{{0, 2}, {1, 2}, {2, 2}, {3, 3}, {4, 3}})) ==
        std::vector<std::string>{"00", "01", "10", "110", "111"});
  CHECK(strings_of(canonical_from_lengths(L{{0, 1}, {1, 1}})) == std::vector<std::string>{"0", "1"});
  // Sort key is (length, symbol), not symbol alone.
  CHECK(strings_of(canonical_from_lengths(L{{0, 2}, {1, 1}, {2, 2}})) ==
        std::vector<std::string>{"10", "0", "11"});
  // Incomplete sets are fine.
  CHECK(strings_of(canonical_from_lengths(L{{0, 2}, {1, 2}})) == std::vector<std::string>{"00", "01"});
  try {
    canonical_from_lengths(L{{0, 1}, {1, 1}, {2, 2}});
    FAIL("expected infeasible_lengths");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::infeasible_lengths);
  }
  CHECK_THROWS_AS(canonical_from_lengths(L{{0, 0}}), Error);
}

TEST_CASE("canonical assignment properties on random feasible lengths") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Frequency> counts(2 + rng() % 60);
    for (auto& c : counts) c = 1 + rng() % 500;
    const auto raw = codes_from_tree(build_tree(SymbolDistribution::from_counts(counts)));
    auto lengths = raw.lengths();
    // Lengthen a few codes so the set is sometimes incomplete.
    if (trial % 3 == 0) {
      for (auto& [s, l] : lengths) l += rng() % 2;
    }
    const auto book = canonical_from_lengths(lengths);
    CHECK(oracle::pairwise_prefix_free(strings_of(book)));
    for (const auto& [s, l] : lengths) CHECK(book.at(s).size() == l);
    // Left-justified values strictly increase in (length, symbol) order.
    std::vector<std::pair<std::size_t, Symbol>> order;
    for (const auto& [s, l] : lengths) order.emplace_back(l, s);
    std::sort(order.begin(), order.end());
    const std::size_t lmax = book.max_length();
    std::string prev;
    for (const auto& [l, s] : order) {
      auto padded = book.at(s).to_string();
      padded.resize(lmax, '0');
      CHECK(prev < padded);
      prev = padded;
    }
  }
}

TEST_CASE("code class predicates") {
  CHECK(is_prefix_free(book_of({"0", "10", "11"})));
  CHECK_FALSE(is_prefix_free(book_of({"0", "01"})));
  CHECK(is_prefix_free(book_of({"00", "10", "11", "010", "011"})));
  CHECK_FALSE(is_prefix_free(book_of({"1", "1"})));

  CHECK(is_non_singular(book_of({"0", "1"})));
  CHECK_FALSE(is_non_singular(book_of({"0", "0"})));
  // Non-singular but not prefix-free.
  CHECK(is_non_singular(book_of({"0", "01"})));
}

TEST_CASE("kraft_sum is exact") {
  CHECK(kraft_sum(book_of({"0", "10", "11"})) == 1);
  CHECK(kraft_sum(book_of({"00", "01", "100", "101", "110", "111"})) == 1);
  CHECK(kraft_sum(book_of({"0"})) == Rational(1, 2));
  // Deep codes beyond 64 bits stay exact.
  std::vector<std::size_t> deep{1, 2, 100, 100};
  CHECK(kraft_sum(deep) == Rational(3, 4) + Rational(boost::multiprecision::cpp_int(1),
                                                      boost::multiprecision::cpp_int(1) << 99));
}

TEST_CASE("optimality_report") {
  const auto five = SymbolDistribution::from_counts(kFiveCounts);
  CHECK(optimality_report(five, book_of({"00", "10", "11", "010", "011"})).all());
  CHECK(optimality_report(SymbolDistribution::uniform(4), book_of({"00", "01", "10", "11"})).all());
  const auto skew = SymbolDistribution::from_counts(std::vector<Frequency>{90, 5, 5});
  const auto bad = optimality_report(skew, book_of({"00", "01", "1"}));
  CHECK_FALSE(bad.monotone_ok);
  CHECK(bad.longest_pair_ok);
  CHECK(bad.sibling_pair_ok);
  const auto lone_longest = optimality_report(skew, book_of({"0", "10", "110"}));
  CHECK_FALSE(lone_longest.longest_pair_ok);
  CHECK_FALSE(lone_longest.sibling_pair_ok);
  // Two longest codes that are not siblings.
  const auto apart = optimality_report(SymbolDistribution::uniform(3), book_of({"1", "000", "011"}));
  CHECK(apart.longest_pair_ok);
  CHECK_FALSE(apart.sibling_pair_ok);
}

TEST_CASE("huffman books on random distributions") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Frequency> counts(2 + rng() % 63);
    for (auto& c : counts) c = 1 + rng() % 10000;
    const auto d = SymbolDistribution::from_counts(counts);
    const auto raw = codes_from_tree(build_tree(d));
    CHECK(is_prefix_free(raw));
    CHECK(is_non_singular(raw));
    CHECK(kraft_sum(raw) == 1);
    CHECK(optimality_report(d, raw).all());
    const auto canon = huffman_codebook(d);
    CHECK(canon.lengths() == raw.lengths());
    const double h = entropy(d), l = expected_length(d, canon);
    CHECK(h <= l + 1e-12);
    CHECK(l < h + 1.0);
  }
}

TEST_CASE("huffman books are deterministic") {
  std::vector<Frequency> counts{5, 5, 5, 3, 3, 8, 1, 1, 1, 1};
  const auto d = SymbolDistribution::from_counts(counts);
  CHECK(huffman_codebook(d) == huffman_codebook(d));
  CHECK(codes_from_tree(build_tree(d)) == codes_from_tree(build_tree(d)));
}

TEST_CASE("tree sum invariant") {
  std::mt19937_64 rng(3);
  std::vector<Frequency> counts(50);
  for (auto& c : counts) c = rng() % 100;
  counts[0] = 1;
  const auto d = SymbolDistribution::from_counts(counts);
  const auto t = build_tree(d);
  validate_tree(t);
  CHECK(t.nodes[t.root].freq == d.total());
}
