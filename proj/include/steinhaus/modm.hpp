#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "steinhaus/residue_tuple.hpp"
#include "steinhaus/triangle.hpp"

namespace steinhaus {

/// Largest size accepted by the mod-m scans.
inline constexpr std::size_t kMaxScanSize = 10000;

/// Smallest k >= 1 with a^k = 1 mod m, by repeated multiplication.
/// Throws InvalidArgument when gcd(a, m) != 1 or m < 2.
std::size_t multiplicative_order(std::int64_t a, std::int64_t m);

/// The arithmetic progression (c, c+d, c+2d, ...) mod an odd m.
struct ApFamilySpec {
  int m = 3;
  int common_difference = 1;
  int start = 0;
  std::size_t order_factor = 1;  ///< ord_m(2^m)
  std::size_t period = 1;        ///< order_factor * m

  /// Throws InvalidSpec unless m is odd and at least 3 and gcd(d, m) = 1.
  static ApFamilySpec make(int m, int common_difference, int start = 0);

  ResidueTuple prefix(std::size_t n) const;
  /// Sizes at which the progression is known to give balanced triangles.
  bool claimed(std::size_t n) const noexcept { return n % period == 0 || (n + 1) % period == 0; }
};

struct ScanRow {
  std::size_t n = 0;
  bool balanced = false;
  std::size_t spread = 0;
  bool claimed = false;
};

/// Balance of the Steinhaus triangle of every prefix of length 1..n_max.
/// Throws TooLarge above kMaxScanSize.
std::vector<ScanRow> ap_balanced_scan(const ApFamilySpec& spec, std::size_t n_max);

/// True iff q derivations of x^infinity return x. Throws InvalidArgument
/// unless |x| = q.
bool orbit_period_check_mod_m(const ResidueTuple& x, std::size_t q);

/// a_{3j} = j, a_{3j+1} = -1-2j, a_{3j+2} = 1+j, reduced mod m, any index.
Residue interlaced_term(std::int64_t index, int m);
/// The first 3m terms, one period of the sequence mod m.
ResidueTuple interlaced_period(int m);

/// Sizes at which the interlaced sequence is known to carry balanced
/// triangles of the given kind.
bool interlaced_claimed(int m, std::size_t n, Orientation kind) noexcept;

struct InterlacedCheck {
  int m = 3;
  std::size_t n = 0;
  Orientation kind = Orientation::Steinhaus;
  /// Triangle whose principal vertex is (0, 0).
  Balance at_origin{false, 0};
  /// First balanced principal vertex (i0, j0) in [0, 6m) x [0, 3m).
  std::optional<std::pair<std::int64_t, std::int64_t>> witness;
  /// Smallest spread over the searched positions (the witness's spread when
  /// there is one).
  std::size_t best_spread = 0;
  bool claimed = false;

  bool balanced() const noexcept { return witness.has_value(); }
};

/// Looks for a balanced triangle of size n in the orbit of the interlaced
/// sequence mod m. The orbit repeats every 6m rows and 3m columns, so the
/// search window covers every position. Throws InvalidSpec unless m is odd
/// and at least 3, TooLarge above kMaxScanSize.
InterlacedCheck interlaced_sequence_check(int m, std::size_t n, Orientation kind = Orientation::Steinhaus);

std::vector<InterlacedCheck> interlaced_scan(int m, std::size_t n_max, Orientation kind = Orientation::Steinhaus);

}  // namespace steinhaus
