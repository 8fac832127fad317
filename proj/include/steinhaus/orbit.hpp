#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "steinhaus/gf2_matrix.hpp"
#include "steinhaus/residue_tuple.hpp"
#include "steinhaus/triangle.hpp"

namespace steinhaus {

/// Largest kernel dimension enumerate_periodic_tuples will expand.
inline constexpr std::size_t kMaxEnumerableDimension = 20;

/// Period of the derived sequence of x^infinity:
/// (a_{p-1}+a_0, a_0+a_1, ..., a_{p-2}+a_{p-1}) mod m.
ResidueTuple derive_tuple(const ResidueTuple& x);

/// Row i of the orbit of x^infinity, by i successive derivations.
ResidueTuple orbit_row(const ResidueTuple& x, std::size_t i);

/// C(n, k) mod m. Binary case uses Lucas (odd iff k & n == k).
Residue binomial_mod(std::uint64_t n, std::uint64_t k, int m);

/// Orbit cell a_{i,j} of x^infinity computed as sum_k C(i,k) a_{0,j-k} mod m.
/// When x generates a p-periodic binary orbit the row index is first reduced
/// mod p.
Residue orbit_cell(const ResidueTuple& x, std::uint64_t i, std::int64_t j);

/// True iff row p of the orbit of x^infinity equals row 0 (p = |x|).
bool generates_periodic_orbit(const ResidueTuple& x);

/// p x p circulant over GF(2) whose row 0 is (C(p,p), C(p,p-1), ..., C(p,1)).
Gf2Matrix wendt_matrix(std::size_t p);

std::size_t kernel_dimension(std::size_t p);

/// Every p-tuple generating a p-periodic orbit, sorted lexicographically.
/// Throws TooLarge when the kernel dimension exceeds kMaxEnumerableDimension.
std::vector<ResidueTuple> enumerate_periodic_tuples(std::size_t p);

/// The p x p fundamental domain of a p-periodic binary orbit.
class PeriodGrid {
 public:
  PeriodGrid() = default;

  std::size_t period() const noexcept { return p_; }
  const ResidueTuple& generator() const noexcept { return generator_; }

  /// Cell a_{i,j} for any integers, reduced mod p in both directions.
  Residue at(std::int64_t i, std::int64_t j) const {
    const auto p = static_cast<std::int64_t>(p_);
    return cells_[static_cast<std::size_t>(floor_mod(i, p) * p + floor_mod(j, p))];
  }
  Residue operator()(std::size_t i, std::size_t j) const { return cells_[i * p_ + j]; }

  ResidueTuple row(std::int64_t i) const;
  ResidueTuple column(std::int64_t j) const;

  MultiplicityTable multiplicity() const;
  /// Multiplicity of the p x p window whose top-left cell is (i0, j0).
  MultiplicityTable window_multiplicity(std::int64_t i0, std::int64_t j0) const;

  friend PeriodGrid build_period_grid(const ResidueTuple& x);
  friend bool operator==(const PeriodGrid&, const PeriodGrid&) = default;

 private:
  std::size_t p_ = 0;
  ResidueTuple generator_;
  std::vector<std::uint8_t> cells_;
};

/// Throws NotPeriodic unless x is binary and generates a |x|-periodic orbit.
PeriodGrid build_period_grid(const ResidueTuple& x);

struct PreperiodReport {
  std::size_t preperiod = 0;
  std::size_t period = 1;
};

/// First repetition d^{i1} x = d^{i2} x of the derivation sequence.
PreperiodReport detect_preperiod(const ResidueTuple& x);

}  // namespace steinhaus
