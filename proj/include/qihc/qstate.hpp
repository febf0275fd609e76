#pragma once

// Ket-bra encoder for uniform alphabets. The "system state" is a sum of
// computational-basis outer products |symbol><code|, split across two
// registers: short codes (2^upper x 2^lower) and long codes
// (2^upper x 2^upper). Encoding applies the transposed register to the
// symbol's ket. Every entry is an exact 0 or 1.

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qihc/bit_string.hpp"
#include "qihc/direct_map.hpp"
#include "qihc/op_counters.hpp"

namespace qihc {

inline constexpr std::uint64_t kMaxStateAlphabet = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kMaxDenseCells = std::uint64_t{1} << 24;

/// Standard basis column vector: a single 1 at `index` out of `dim` rows.
struct BasisKet {
  std::uint64_t dim = 0;
  std::uint64_t index = 0;

  friend bool operator==(const BasisKet&, const BasisKet&) = default;
};

/// Throws invalid_symbol unless index < dim and dim is a power of two.
BasisKet basis_ket(std::uint64_t index, std::uint64_t dim);

struct Coord {
  std::uint64_t row;
  std::uint64_t col;

  friend bool operator==(const Coord&, const Coord&) = default;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

/// 0/1 matrix holding at most one 1 per row and per column (a partial
/// permutation). Stored as coordinates sorted by row.
class SparseZeroOneMatrix {
 public:
  SparseZeroOneMatrix(std::uint64_t rows, std::uint64_t cols);

  std::uint64_t rows() const noexcept { return rows_; }
  std::uint64_t cols() const noexcept { return cols_; }
  const std::vector<Coord>& ones() const noexcept { return ones_; }
  std::size_t nonzeros() const noexcept { return ones_.size(); }

  /// Sets one entry. Throws internal_corruption if the entry is already 1 or
  /// its row/column is occupied, and invalid_symbol if out of bounds.
  void insert(Coord c);

  /// Accumulates another matrix of the same shape.
  SparseZeroOneMatrix& operator+=(const SparseZeroOneMatrix& other);

  /// Column holding the 1 in `row`, if any.
  std::optional<std::uint64_t> col_in_row(std::uint64_t row) const;
  /// Row holding the 1 in `col`, if any.
  std::optional<std::uint64_t> row_in_col(std::uint64_t col) const;

  friend bool operator==(const SparseZeroOneMatrix&, const SparseZeroOneMatrix&) = default;

 private:
  std::uint64_t rows_;
  std::uint64_t cols_;
  std::vector<Coord> ones_;             // sorted by row
  std::vector<std::uint64_t> used_cols_;  // sorted
};

/// |k><b| : a (k.dim x b.dim) matrix with a single 1 at (k.index, b.index).
SparseZeroOneMatrix outer_product(const BasisKet& k, const BasisKet& b);

/// Lazy transpose of a register, applied to a ket by coordinate lookup.
class TransposedRegister {
 public:
  explicit TransposedRegister(const SparseZeroOneMatrix& m) : m_(&m) {}
  const SparseZeroOneMatrix& nested() const noexcept { return *m_; }

 private:
  const SparseZeroOneMatrix* m_;
};

inline TransposedRegister transpose(const SparseZeroOneMatrix& m) { return TransposedRegister(m); }

/// transpose(M) * |k>: a basis ket of dimension M.cols(), or nullopt for the
/// zero vector. Throws invalid_symbol on a dimension mismatch.
std::optional<BasisKet> operator*(const TransposedRegister& t, const BasisKet& k);

struct EncoderState {
  CodeParams params;
  SparseZeroOneMatrix state1;  // short codes, 2^upper x 2^lower
  SparseZeroOneMatrix state2;  // long codes, 2^upper x 2^upper; empty when diff == 0
};

/// Accumulates the system state for n equally likely symbols (n <= 2^24).
EncoderState build_state(std::uint64_t n, OpCounters* counters = nullptr);

/// Code of `numb` computed from the state registers.
BitString qstate_encode(const EncoderState& s, std::uint64_t numb, OpCounters* counters = nullptr);

/// Checks the register shape and placement invariants; throws
/// internal_corruption on violation.
void validate_state(const EncoderState& s);

[[noreturn]] void throw_too_large_for_dense(std::uint64_t rows, std::uint64_t cols);
[[noreturn]] void throw_not_zero_one();

template <typename Scalar = std::uint8_t>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar = std::uint8_t>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Full 0/1 grid; throws too_large beyond 2^24 cells.
template <typename Scalar = std::uint8_t>
DenseMatrix<Scalar> densify(const SparseZeroOneMatrix& m) {
  if (m.rows() == 0 || m.cols() > kMaxDenseCells / m.rows()) {
    throw_too_large_for_dense(m.rows(), m.cols());
  }
  DenseMatrix<Scalar> out =
      DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (const auto& c : m.ones()) {
    out(static_cast<Eigen::Index>(c.row), static_cast<Eigen::Index>(c.col)) = Scalar{1};
  }
  return out;
}

template <typename Scalar = std::uint8_t>
DenseVector<Scalar> densify(const BasisKet& k) {
  if (k.dim > kMaxDenseCells) throw_too_large_for_dense(k.dim, 1);
  DenseVector<Scalar> out = DenseVector<Scalar>::Zero(static_cast<Eigen::Index>(k.dim));
  out(static_cast<Eigen::Index>(k.index)) = Scalar{1};
  return out;
}

/// Inverse of densify; throws internal_corruption on entries other than 0/1
/// or on a grid that is not a partial permutation.
template <typename Derived>
SparseZeroOneMatrix sparsify(const Eigen::MatrixBase<Derived>& dense) {
  SparseZeroOneMatrix out(static_cast<std::uint64_t>(dense.rows()),
                          static_cast<std::uint64_t>(dense.cols()));
  for (Eigen::Index r = 0; r < dense.rows(); ++r) {
    for (Eigen::Index c = 0; c < dense.cols(); ++c) {
      const auto v = dense(r, c);
      if (v == 0) continue;
      if (v != 1) throw_not_zero_one();
      out.insert({static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(c)});
    }
  }
  return out;
}

}  // namespace qihc
