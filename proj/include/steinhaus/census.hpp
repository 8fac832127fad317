#pragma once

#include <cstddef>
#include <cstdint>

#include "steinhaus/residue_tuple.hpp"
#include "steinhaus/triangle.hpp"

namespace steinhaus {

/// Largest sizes the exhaustive binary censuses accept (2^16 and 2^19
/// triangles respectively).
inline constexpr std::size_t kMaxSteinhausCensus = 16;
inline constexpr std::size_t kMaxPascalCensus = 10;

struct CensusResult {
  std::size_t n = 0;
  Orientation kind = Orientation::Steinhaus;
  std::uint64_t triangles = 0;
  std::uint64_t total_ones = 0;

  double average() const { return static_cast<double>(total_ones) / static_cast<double>(triangles); }
  /// total_ones / triangles == C(n+1,2) / 2, checked in integers.
  bool average_is_half_triangular() const { return 2 * total_ones == triangles * triangular(n); }
};

/// Total number of ones over every binary triangle of size n.
CensusResult average_census(std::size_t n, Orientation kind);

struct ExtremalResult {
  std::size_t n = 0;
  Orientation kind = Orientation::Steinhaus;
  std::uint64_t max_ones = 0;
  std::uint64_t formula = 0;
  /// First triangle (in enumeration order) reaching the maximum.
  Triangle witness;
};

ExtremalResult extremal_ones_scan(std::size_t n, Orientation kind);

/// ceil(2/3 * C(n+1,2)).
std::uint64_t steinhaus_max_ones_formula(std::size_t n);
/// ceil(2/3 * C(n+1,2)) + eps(n) with eps = 0 at n = 1, 3 at n = 8, 2 for
/// n = 1 mod 3 and 1 otherwise.
std::uint64_t pascal_max_ones_formula(std::size_t n);

/// Initial segment of length n of (110)^infinity.
ResidueTuple periodic_110_prefix(std::size_t n);

}  // namespace steinhaus
