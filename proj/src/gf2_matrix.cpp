#include "steinhaus/gf2_matrix.hpp"

#include <bit>
#include <utility>

#include "steinhaus/error.hpp"

namespace steinhaus {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * ((cols + 63) / 64), 0) {}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  auto& word = row(r)[c / 64];
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  word = value ? (word | mask) : (word & ~mask);
}

ResidueTuple Gf2Matrix::multiply(const ResidueTuple& v) const {
  if (v.modulus() != 2 || v.size() != cols_) {
    throw Error(ErrorCode::InvalidArgument, "vector must be binary with one entry per column");
  }
  std::vector<Residue> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    int acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc ^= (get(r, c) ? v[c] : 0);
    out[r] = acc;
  }
  return ResidueTuple(std::move(out), 2);
}

RowEchelon row_reduce(Gf2Matrix mat) {
  RowEchelon result;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < mat.cols() && pivot_row < mat.rows(); ++c) {
    std::size_t found = pivot_row;
    while (found < mat.rows() && !mat.get(found, c)) ++found;
    if (found == mat.rows()) continue;
    if (found != pivot_row) {
      auto a = mat.row(found);
      auto b = mat.row(pivot_row);
      for (std::size_t w = 0; w < a.size(); ++w) std::swap(a[w], b[w]);
    }
    const auto pivot = mat.row(pivot_row);
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      if (r == pivot_row || !mat.get(r, c)) continue;
      auto target = mat.row(r);
      for (std::size_t w = 0; w < target.size(); ++w) target[w] ^= pivot[w];
    }
    result.pivot_columns.push_back(c);
    ++pivot_row;
  }
  result.reduced = std::move(mat);
  return result;
}

std::size_t rank(const Gf2Matrix& mat) { return row_reduce(mat).pivot_columns.size(); }

std::vector<ResidueTuple> gf2_kernel_basis(const Gf2Matrix& mat) {
  const RowEchelon echelon = row_reduce(mat);
  std::vector<bool> is_pivot(mat.cols(), false);
  for (std::size_t c : echelon.pivot_columns) is_pivot[c] = true;

  std::vector<ResidueTuple> basis;
  for (std::size_t free = 0; free < mat.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(mat.cols(), 0);
    v[free] = 1;
    for (std::size_t k = 0; k < echelon.pivot_columns.size(); ++k)
      v[echelon.pivot_columns[k]] = echelon.reduced.get(k, free) ? 1 : 0;
    basis.emplace_back(std::move(v), 2);
  }
  return basis;
}

}  // namespace steinhaus
