#include "steinhaus/census.hpp"

#include <bit>
#include <string>

#include "steinhaus/error.hpp"

namespace steinhaus {
namespace {

void check_bounds(std::size_t n, Orientation kind) {
  const std::size_t bound = kind == Orientation::Steinhaus ? kMaxSteinhausCensus : kMaxPascalCensus;
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "census size must be at least 1");
  if (n > bound) {
    throw Error(ErrorCode::TooLarge, std::string(to_string(kind)) + " census is limited to n <= " +
                                         std::to_string(bound));
  }
}

// Row k of a Steinhaus triangle packed with entry j at bit j.
std::uint64_t steinhaus_ones(std::uint32_t seed, std::size_t n) {
  std::uint64_t ones = 0;
  std::uint32_t row = seed;
  for (std::size_t len = n; len > 0; --len) {
    ones += static_cast<std::uint64_t>(std::popcount(row));
    row = (row ^ (row >> 1)) & ((1U << (len - 1)) - 1U);
  }
  return ones;
}

// left has n bits, right contributes its n-1 bits below the shared apex.
std::uint64_t pascal_ones(std::uint32_t left, std::uint32_t right_tail, std::size_t n) {
  std::uint64_t ones = left & 1U;
  std::uint32_t row = left & 1U;
  for (std::size_t t = 1; t < n; ++t) {
    const std::uint32_t interior = ((row << 1) ^ row) & ((1U << t) - 2U);
    row = interior | ((left >> t) & 1U) | (((right_tail >> (t - 1)) & 1U) << t);
    ones += static_cast<std::uint64_t>(std::popcount(row));
  }
  return ones;
}

std::uint64_t enumeration_size(std::size_t n, Orientation kind) {
  return kind == Orientation::Steinhaus ? (std::uint64_t{1} << n) : (std::uint64_t{1} << (2 * n - 1));
}

template <class Visit>
void for_each_binary_triangle(std::size_t n, Orientation kind, Visit&& visit) {
  if (kind == Orientation::Steinhaus) {
    for (std::uint32_t seed = 0; seed < (1U << n); ++seed) visit(seed, 0U, steinhaus_ones(seed, n));
    return;
  }
  for (std::uint32_t left = 0; left < (1U << n); ++left)
    for (std::uint32_t tail = 0; tail < (1U << (n - 1)); ++tail) visit(left, tail, pascal_ones(left, tail, n));
}

Triangle materialize(std::uint32_t a, std::uint32_t b, std::size_t n, Orientation kind) {
  if (kind == Orientation::Steinhaus) return build_steinhaus(ResidueTuple::from_bits(a, n));
  const std::uint32_t right = (a & 1U) | (b << 1);
  return build_pascal(ResidueTuple::from_bits(a, n), ResidueTuple::from_bits(right, n));
}

}  // namespace

CensusResult average_census(std::size_t n, Orientation kind) {
  check_bounds(n, kind);
  CensusResult result{n, kind, enumeration_size(n, kind), 0};
  for_each_binary_triangle(n, kind, [&](std::uint32_t, std::uint32_t, std::uint64_t ones) {
    result.total_ones += ones;
  });
  return result;
}

ExtremalResult extremal_ones_scan(std::size_t n, Orientation kind) {
  check_bounds(n, kind);
  ExtremalResult result;
  result.n = n;
  result.kind = kind;
  result.formula = kind == Orientation::Steinhaus ? steinhaus_max_ones_formula(n) : pascal_max_ones_formula(n);
  std::uint32_t best_a = 0, best_b = 0;
  bool any = false;
  for_each_binary_triangle(n, kind, [&](std::uint32_t a, std::uint32_t b, std::uint64_t ones) {
    if (!any || ones > result.max_ones) {
      result.max_ones = ones;
      best_a = a;
      best_b = b;
      any = true;
    }
  });
  result.witness = materialize(best_a, best_b, n, kind);
  return result;
}

std::uint64_t steinhaus_max_ones_formula(std::size_t n) { return (2 * triangular(n) + 2) / 3; }

std::uint64_t pascal_max_ones_formula(std::size_t n) {
  std::uint64_t eps = 0;
  if (n == 1) {
    eps = 0;
  } else if (n == 8) {
    eps = 3;
  } else if (n % 3 == 1) {
    eps = 2;
  } else {
    eps = 1;
  }
  return steinhaus_max_ones_formula(n) + eps;
}

ResidueTuple periodic_110_prefix(std::size_t n) {
  std::vector<Residue> entries(n);
  for (std::size_t j = 0; j < n; ++j) entries[j] = j % 3 == 2 ? 0 : 1;
  return ResidueTuple(std::move(entries), 2);
}

}  // namespace steinhaus
