#include "qihc/bench.hpp"

#include <bit>
#include <chrono>
#include <cmath>

#include "qihc/direct_map.hpp"
#include "qihc/errors.hpp"
#include "qihc/huffman.hpp"
#include "qihc/qstate.hpp"

namespace qihc {

BenchModes parse_bench_modes(const std::string& text) {
  if (text == "all") return {};
  if (text == "tree") return {true, false, false};
  if (text == "direct") return {false, true, false};
  if (text == "qstate") return {false, false, true};
  throw Error(ErrorKind::usage, "unknown bench mode '" + text + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t nanos_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

class Checker {
 public:
  Checker(std::uint64_t n, const char* mode, BenchResult& out) : n_(n), mode_(mode), out_(out) {}

  void expect(bool ok, const std::string& bound) {
    if (!ok) {
      out_.violations.push_back("n=" + std::to_string(n_) + " " + mode_ + ": " + bound);
    }
  }

  void row(const char* counter, std::uint64_t value, std::int64_t nanos) {
    out_.rows.push_back({n_, mode_, counter, value, nanos});
  }

 private:
  std::uint64_t n_;
  std::string mode_;
  BenchResult& out_;
};

}  // namespace

BenchResult run_bench(std::span<const std::uint64_t> ns, BenchModes modes) {
  BenchResult result;
  for (const auto n : ns) {
    const auto p = code_params(n);
    const double lg = std::log2(static_cast<double>(n));
    const double n_lg2 = static_cast<double>(n) * lg * lg;
    // Total code bits for one pass over the alphabet.
    const std::uint64_t census = (n - p.diff) * p.lower + p.diff * p.upper;

    if (modes.tree) {
      Checker check(n, "tree", result);
      OpCounters c;
      auto start = Clock::now();
      const auto tree = build_tree(SymbolDistribution::uniform(n), &c);
      const auto build_ns = nanos_since(start);
      start = Clock::now();
      const auto book = codes_from_tree(tree, &c);
      const auto walk_ns = nanos_since(start);
      check.row("tree_merges", c.tree_merges, build_ns);
      check.row("tree_walk_steps", c.tree_walk_steps, walk_ns);
      check.expect(c.tree_merges == n - 1, "tree_merges == n - 1");
      check.expect(static_cast<double>(c.tree_merges) <= static_cast<double>(n) * static_cast<double>(n),
                   "tree_merges <= n^2");
      check.expect(c.tree_walk_steps == census, "tree_walk_steps == total uniform code length");
      check.expect(book.max_length() <= n - 1, "per-symbol walk <= n - 1 steps");
    }

    if (modes.direct) {
      Checker check(n, "direct", result);
      OpCounters c;
      bool widths_ok = true;
      const auto start = Clock::now();
      for (std::uint64_t i = 0; i < n; ++i) {
        const auto before = c.bits_emitted;
        direct_encode(p, i, &c);
        const auto width = c.bits_emitted - before;
        widths_ok = widths_ok && (width == p.lower || width == p.upper);
      }
      check.row("bits_emitted", c.bits_emitted, nanos_since(start));
      check.expect(widths_ok, "bits per symbol in {lower, upper}");
      check.expect(p.upper == static_cast<unsigned>(std::bit_width(n - 1)),
                   "upper == ceil(lg n)");
      check.expect(c.bits_emitted == census, "bits_emitted == length census");
    }

    if (modes.qstate) {
      Checker check(n, "qstate", result);
      OpCounters c;
      auto start = Clock::now();
      const auto state = build_state(n, &c);
      check.row("state_ones_written", c.state_ones_written, nanos_since(start));
      start = Clock::now();
      for (std::uint64_t i = 0; i < n; ++i) qstate_encode(state, i, &c);
      const auto encode_ns = nanos_since(start);
      check.row("coord_lookups", c.coord_lookups, encode_ns);
      check.row("bits_emitted", c.bits_emitted, encode_ns);
      check.expect(c.state_ones_written == n, "state_ones_written == n");
      check.expect(static_cast<double>(c.state_ones_written) <= n_lg2,
                   "state_ones_written <= n (lg n)^2");
      check.expect(c.coord_lookups == n, "one coordinate lookup per encode");
      check.expect(1.0 <= lg * lg, "per-encode lookups <= (lg n)^2");
      check.expect(c.bits_emitted == census, "bits_emitted == length census");
    }
  }
  return result;
}

void write_bench_csv(std::ostream& out, const BenchResult& result) {
  out << "n,mode,counter,value,nanos\n";
  for (const auto& r : result.rows) {
    out << r.n << ',' << r.mode << ',' << r.counter << ',' << r.value << ',' << r.nanos << '\n';
  }
}

}  // namespace qihc
