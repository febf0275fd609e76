#include "qihc/qstate.hpp"

#include <algorithm>
#include <bit>

#include "qihc/errors.hpp"

namespace qihc {

void throw_too_large_for_dense(std::uint64_t rows, std::uint64_t cols) {
  throw Error(ErrorKind::too_large, "dense form of " + std::to_string(rows) + "x" +
                                        std::to_string(cols) + " exceeds 2^24 cells");
}

void throw_not_zero_one() {
  throw Error(ErrorKind::internal_corruption, "matrix entry is neither 0 nor 1");
}

BasisKet basis_ket(std::uint64_t index, std::uint64_t dim) {
  if (!std::has_single_bit(dim)) {
    throw Error(ErrorKind::invalid_symbol, "ket dimension must be a power of two");
  }
  if (index >= dim) {
    throw Error(ErrorKind::invalid_symbol, "ket index " + std::to_string(index) +
                                               " outside dimension " + std::to_string(dim));
  }
  return {dim, index};
}

SparseZeroOneMatrix::SparseZeroOneMatrix(std::uint64_t rows, std::uint64_t cols)
    : rows_(rows), cols_(cols) {}

void SparseZeroOneMatrix::insert(Coord c) {
  if (c.row >= rows_ || c.col >= cols_) {
    throw Error(ErrorKind::invalid_symbol, "coordinate outside matrix shape");
  }
  auto row_it = std::lower_bound(ones_.begin(), ones_.end(), c.row,
                                 [](const Coord& a, std::uint64_t r) { return a.row < r; });
  auto col_it = std::lower_bound(used_cols_.begin(), used_cols_.end(), c.col);
  const bool row_taken = row_it != ones_.end() && row_it->row == c.row;
  const bool col_taken = col_it != used_cols_.end() && *col_it == c.col;
  if (row_taken && row_it->col == c.col) {
    throw Error(ErrorKind::internal_corruption, "entry would exceed 1");
  }
  if (row_taken || col_taken) {
    throw Error(ErrorKind::internal_corruption, "register is no longer a partial permutation");
  }
  ones_.insert(row_it, c);
  used_cols_.insert(col_it, c.col);
}

SparseZeroOneMatrix& SparseZeroOneMatrix::operator+=(const SparseZeroOneMatrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_) {
    throw Error(ErrorKind::internal_corruption, "matrix shapes differ");
  }
  for (const auto& c : other.ones_) insert(c);
  return *this;
}

std::optional<std::uint64_t> SparseZeroOneMatrix::col_in_row(std::uint64_t row) const {
  auto it = std::lower_bound(ones_.begin(), ones_.end(), row,
                             [](const Coord& a, std::uint64_t r) { return a.row < r; });
  if (it == ones_.end() || it->row != row) return std::nullopt;
  return it->col;
}

std::optional<std::uint64_t> SparseZeroOneMatrix::row_in_col(std::uint64_t col) const {
  auto it = std::find_if(ones_.begin(), ones_.end(), [col](const Coord& c) { return c.col == col; });
  if (it == ones_.end()) return std::nullopt;
  return it->row;
}

SparseZeroOneMatrix outer_product(const BasisKet& k, const BasisKet& b) {
  SparseZeroOneMatrix m(k.dim, b.dim);
  m.insert({k.index, b.index});
  return m;
}

std::optional<BasisKet> operator*(const TransposedRegister& t, const BasisKet& k) {
  const auto& m = t.nested();
  if (k.dim != m.rows()) {
    throw Error(ErrorKind::invalid_symbol, "ket dimension does not match register rows");
  }
  // Column k.index of M^T is row k.index of M.
  const auto col = m.col_in_row(k.index);
  if (!col) return std::nullopt;
  return BasisKet{m.cols(), *col};
}

EncoderState build_state(std::uint64_t n, OpCounters* counters) {
  const auto p = code_params(n);
  if (n > kMaxStateAlphabet) {
    throw Error(ErrorKind::too_large, "state registers are capped at 2^24 symbols");
  }
  const std::uint64_t dim_upper = std::uint64_t{1} << p.upper;
  const std::uint64_t dim_lower = std::uint64_t{1} << p.lower;
  EncoderState s{p, SparseZeroOneMatrix(dim_upper, dim_lower),
                 SparseZeroOneMatrix(dim_upper, dim_upper)};

  auto accumulate = [&](SparseZeroOneMatrix& reg, std::uint64_t symbol, std::uint64_t code) {
    reg += outer_product(basis_ket(symbol, dim_upper), basis_ket(code, reg.cols()));
    if (counters) ++counters->state_ones_written;
  };

  if (p.lower == p.upper) {
    for (std::uint64_t counter = 0; counter < n; ++counter) accumulate(s.state1, counter, counter);
  } else {
    for (std::uint64_t counter = 0; counter <= p.last_short_symbol(); ++counter) {
      accumulate(s.state1, counter, counter);
    }
    for (std::uint64_t counter = n - p.diff; counter < n; ++counter) {
      accumulate(s.state2, counter, dim_upper + counter - n);
    }
  }
  return s;
}

BitString qstate_encode(const EncoderState& s, std::uint64_t numb, OpCounters* counters) {
  const auto& p = s.params;
  if (numb >= p.n) {
    throw Error(ErrorKind::invalid_symbol, "symbol " + std::to_string(numb) +
                                               " outside alphabet of size " +
                                               std::to_string(p.n));
  }
  const bool short_code = p.lower == p.upper || numb <= p.last_short_symbol();
  const auto& reg = short_code ? s.state1 : s.state2;
  const auto result = transpose(reg) * basis_ket(numb, std::uint64_t{1} << p.upper);
  if (counters) ++counters->coord_lookups;
  if (!result) {
    throw Error(ErrorKind::internal_corruption,
                "register maps symbol " + std::to_string(numb) + " to the zero vector");
  }
  const unsigned width = short_code ? p.lower : p.upper;
  if (counters) counters->bits_emitted += width;
  return binary_fixed(result->index, width);
}

void validate_state(const EncoderState& s) {
  const auto& p = s.params;
  const std::uint64_t dim_upper = std::uint64_t{1} << p.upper;
  const std::uint64_t dim_lower = std::uint64_t{1} << p.lower;
  auto fail = [](const char* what) { throw Error(ErrorKind::internal_corruption, what); };
  if (s.state1.rows() != dim_upper || s.state1.cols() != dim_lower) fail("state1 has the wrong shape");
  if (s.state2.rows() != dim_upper || s.state2.cols() != dim_upper) fail("state2 has the wrong shape");
  if (s.state1.nonzeros() != p.n - p.diff) fail("state1 has the wrong number of ones");
  if (s.state2.nonzeros() != p.diff) fail("state2 has the wrong number of ones");
  for (const auto& c : s.state1.ones()) {
    if (c.row != c.col || c.row > p.last_short_symbol()) fail("misplaced one in state1");
  }
  for (const auto& c : s.state2.ones()) {
    if (c.row < p.n - p.diff || c.row >= p.n || c.col != dim_upper + c.row - p.n) {
      fail("misplaced one in state2");
    }
  }
}

}  // namespace qihc
