#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace qihc {

struct BenchModes {
  bool tree = true;
  bool direct = true;
  bool qstate = true;
};

/// Parses "all", "tree", "direct" or "qstate".
BenchModes parse_bench_modes(const std::string& text);

struct BenchRow {
  std::uint64_t n;
  std::string mode;
  std::string counter;
  std::uint64_t value;
  std::int64_t nanos;  // wall time of the phase that produced the counter
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::vector<std::string> violations;  // named bound failures; empty on success

  bool ok() const noexcept { return violations.empty(); }
};

/// Runs each encoder over a uniform alphabet of every requested size and
/// checks the exact counter values against the stated complexity bounds.
BenchResult run_bench(std::span<const std::uint64_t> ns, BenchModes modes);

/// "n,mode,counter,value,nanos" header plus one line per row.
void write_bench_csv(std::ostream& out, const BenchResult& result);

}  // namespace qihc
