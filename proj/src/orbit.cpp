#include "steinhaus/orbit.hpp"

#include <algorithm>
#include <map>

#include "packed.hpp"
#include "steinhaus/error.hpp"

namespace steinhaus {

ResidueTuple derive_tuple(const ResidueTuple& x) {
  if (x.empty()) throw Error(ErrorCode::EmptyTuple, "cannot derive an empty tuple");
  const std::size_t p = x.size();
  const int m = x.modulus();
  std::vector<Residue> out(p);
  out[0] = (x[p - 1] + x[0]) % m;
  for (std::size_t j = 1; j < p; ++j) out[j] = (x[j - 1] + x[j]) % m;
  return ResidueTuple(std::move(out), m);
}

ResidueTuple orbit_row(const ResidueTuple& x, std::size_t i) {
  ResidueTuple row = x;
  for (std::size_t k = 0; k < i; ++k) row = derive_tuple(row);
  return row;
}

Residue binomial_mod(std::uint64_t n, std::uint64_t k, int m) {
  if (k > n) return 0;
  if (m == 2) return (k & n) == k ? 1 : 0;
  std::vector<int> row{1};
  for (std::uint64_t r = 1; r <= n; ++r) {
    std::vector<int> next(row.size() + 1, 1);
    for (std::size_t c = 1; c < row.size(); ++c) next[c] = (row[c - 1] + row[c]) % m;
    row = std::move(next);
  }
  return row[k] % m;
}

bool generates_periodic_orbit(const ResidueTuple& x) {
  if (x.empty()) return false;
  return orbit_row(x, x.size()) == x;
}

Residue orbit_cell(const ResidueTuple& x, std::uint64_t i, std::int64_t j) {
  if (x.empty()) throw Error(ErrorCode::EmptyTuple, "orbit of an empty tuple");
  const int m = x.modulus();
  if (m == 2) {
    if (i >= x.size() && generates_periodic_orbit(x)) i %= x.size();
    // Lucas: C(i,k) is odd exactly for the submasks k of i.
    int acc = 0;
    for (std::uint64_t k = i;; k = (k - 1) & i) {
      acc ^= x.cyclic(j - static_cast<std::int64_t>(k));
      if (k == 0) break;
    }
    return acc;
  }
  std::vector<int> coeff{1};
  for (std::uint64_t r = 1; r <= i; ++r) {
    std::vector<int> next(coeff.size() + 1, 1);
    for (std::size_t c = 1; c < coeff.size(); ++c) next[c] = (coeff[c - 1] + coeff[c]) % m;
    coeff = std::move(next);
  }
  std::int64_t acc = 0;
  for (std::uint64_t k = 0; k <= i; ++k) acc += coeff[k] * x.cyclic(j - static_cast<std::int64_t>(k));
  return static_cast<Residue>(acc % m);
}

Gf2Matrix wendt_matrix(std::size_t p) {
  if (p == 0) throw Error(ErrorCode::InvalidArgument, "Wendt matrix needs p >= 1");
  std::vector<bool> first(p);
  for (std::size_t c = 0; c < p; ++c) first[c] = binomial_mod(p, p - c, 2) == 1;
  Gf2Matrix w(p, p);
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < p; ++c) w.set(r, c, first[(c + p - r) % p]);
  return w;
}

std::size_t kernel_dimension(std::size_t p) { return p - rank(wendt_matrix(p)); }

std::vector<ResidueTuple> enumerate_periodic_tuples(std::size_t p) {
  if (p > 64) throw Error(ErrorCode::TooLarge, "periods above 64 are not supported");
  const auto basis = gf2_kernel_basis(wendt_matrix(p));
  if (basis.size() > kMaxEnumerableDimension) {
    throw Error(ErrorCode::TooLarge, "kernel dimension " + std::to_string(basis.size()) + " exceeds " +
                                         std::to_string(kMaxEnumerableDimension));
  }
  std::vector<std::uint64_t> packed_basis;
  for (const auto& v : basis) packed_basis.push_back(v.to_bits());

  // Gray-code walk over all coefficient vectors.
  std::vector<std::uint64_t> members;
  members.reserve(std::size_t{1} << basis.size());
  std::uint64_t current = 0;
  members.push_back(current);
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << basis.size()); ++step) {
    current ^= packed_basis[static_cast<std::size_t>(std::countr_zero(step))];
    members.push_back(current);
  }
  std::sort(members.begin(), members.end(), [p](std::uint64_t a, std::uint64_t b) {
    return packed::lex_key(a, p) < packed::lex_key(b, p);
  });

  std::vector<ResidueTuple> out;
  out.reserve(members.size());
  for (std::uint64_t bits : members) out.push_back(ResidueTuple::from_bits(bits, p));
  return out;
}

ResidueTuple PeriodGrid::row(std::int64_t i) const {
  std::vector<Residue> out(p_);
  for (std::size_t j = 0; j < p_; ++j) out[j] = at(i, static_cast<std::int64_t>(j));
  return ResidueTuple(std::move(out), 2);
}

ResidueTuple PeriodGrid::column(std::int64_t j) const {
  std::vector<Residue> out(p_);
  for (std::size_t i = 0; i < p_; ++i) out[i] = at(static_cast<std::int64_t>(i), j);
  return ResidueTuple(std::move(out), 2);
}

MultiplicityTable PeriodGrid::multiplicity() const {
  MultiplicityTable table(2);
  for (std::uint8_t c : cells_) table.add(c);
  return table;
}

MultiplicityTable PeriodGrid::window_multiplicity(std::int64_t i0, std::int64_t j0) const {
  MultiplicityTable table(2);
  const auto p = static_cast<std::int64_t>(p_);
  for (std::int64_t i = 0; i < p; ++i)
    for (std::int64_t j = 0; j < p; ++j) table.add(at(i0 + i, j0 + j));
  return table;
}

PeriodGrid build_period_grid(const ResidueTuple& x) {
  if (x.modulus() != 2) throw Error(ErrorCode::InvalidArgument, "period grids are binary");
  if (!generates_periodic_orbit(x)) {
    throw Error(ErrorCode::NotPeriodic, x.to_string() + " does not generate a " + std::to_string(x.size()) +
                                            "-periodic orbit");
  }
  PeriodGrid grid;
  grid.p_ = x.size();
  grid.generator_ = x;
  grid.cells_.reserve(grid.p_ * grid.p_);
  ResidueTuple row = x;
  for (std::size_t i = 0; i < grid.p_; ++i) {
    for (Residue e : row.entries()) grid.cells_.push_back(static_cast<std::uint8_t>(e));
    row = derive_tuple(row);
  }
  return grid;
}

PreperiodReport detect_preperiod(const ResidueTuple& x) {
  if (x.empty()) throw Error(ErrorCode::EmptyTuple, "cannot iterate an empty tuple");
  std::map<ResidueTuple, std::size_t> seen;
  ResidueTuple row = x;
  for (std::size_t step = 0;; ++step) {
    const auto [it, inserted] = seen.emplace(row, step);
    if (!inserted) return {it->second, step - it->second};
    row = derive_tuple(row);
  }
}

}  // namespace steinhaus
