#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "steinhaus/residue_tuple.hpp"

namespace steinhaus {

/// Dense matrix over GF(2), each row packed into 64-bit words (column c is
/// bit c % 64 of word c / 64).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1U; }
  void set(std::size_t r, std::size_t c, bool value);

  std::span<const std::uint64_t> row(std::size_t r) const { return {bits_.data() + r * words_, words_}; }
  std::span<std::uint64_t> row(std::size_t r) { return {bits_.data() + r * words_, words_}; }

  /// Matrix-vector product over GF(2); `v` must be binary of length cols().
  ResidueTuple multiply(const ResidueTuple& v) const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Reduced row echelon form, pivots chosen leftmost-first.
struct RowEchelon {
  Gf2Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon row_reduce(Gf2Matrix mat);
std::size_t rank(const Gf2Matrix& mat);

/// Basis of the null space, one vector per free column in ascending order.
/// The vector for free column f has a one at f and zeros at the other free
/// columns.
std::vector<ResidueTuple> gf2_kernel_basis(const Gf2Matrix& mat);

}  // namespace steinhaus
