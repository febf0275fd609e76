#pragma once

#include <cstdint>

namespace qihc {

/// Exact operation counts gathered by the instrumented encoders. Every
/// instrumented function takes an optional pointer and only ever adds.
struct OpCounters {
  std::uint64_t tree_merges = 0;
  std::uint64_t tree_walk_steps = 0;
  std::uint64_t bits_emitted = 0;
  std::uint64_t state_ones_written = 0;
  std::uint64_t coord_lookups = 0;
};

}  // namespace qihc
