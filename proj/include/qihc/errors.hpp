#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qihc {

enum class ErrorKind {
  invalid_distribution,
  incomplete_codebook,
  infeasible_lengths,
  structural,
  unsupported_alphabet,
  overflow,
  invalid_symbol,
  truncation,
  corruption,
  internal_corruption,
  too_large,
  format,
  corrupt_header,
  io,
  usage,
};

/// Stable machine-readable tag, e.g. "invalid-symbol".
std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; the kind drives CLI reason prefixes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qihc
