#include "steinhaus/modm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "steinhaus/error.hpp"
#include "steinhaus/orbit.hpp"

namespace steinhaus {
namespace {

void check_odd_modulus(int m) {
  if (m < 3 || m % 2 == 0) {
    throw Error(ErrorCode::InvalidSpec, "modulus must be odd and at least 3, got " + std::to_string(m));
  }
}

void check_scan_size(std::size_t n) {
  if (n > kMaxScanSize) {
    throw Error(ErrorCode::TooLarge, "scan size " + std::to_string(n) + " exceeds " + std::to_string(kMaxScanSize));
  }
}

// Rows 0..6m-1 of the interlaced orbit, each one period of 3m columns.
std::vector<ResidueTuple> interlaced_rows(int m) {
  const std::size_t height = 6 * static_cast<std::size_t>(m);
  std::vector<ResidueTuple> rows;
  rows.reserve(height);
  rows.push_back(interlaced_period(m));
  for (std::size_t i = 1; i < height; ++i) rows.push_back(derive_tuple(rows.back()));
  if (derive_tuple(rows.back()) != rows.front()) {
    throw Error(ErrorCode::NotPeriodic, "interlaced orbit mod " + std::to_string(m) + " does not repeat after 6m rows");
  }
  return rows;
}

MultiplicityTable count_at(const std::vector<ResidueTuple>& rows, int m, std::int64_t i0, std::int64_t j0,
                           std::size_t n, Orientation kind) {
  const auto height = static_cast<std::int64_t>(rows.size());
  MultiplicityTable counts(m);
  for (std::size_t t = 0; t < n; ++t) {
    const ResidueTuple& row = rows[static_cast<std::size_t>(floor_mod(i0 + static_cast<std::int64_t>(t), height))];
    const auto first = static_cast<std::int64_t>(kind == Orientation::Steinhaus ? t : 0);
    const auto width = static_cast<std::int64_t>(kind == Orientation::Steinhaus ? n - t : t + 1);
    for (std::int64_t k = 0; k < width; ++k) counts.add(row.cyclic(j0 + first + k));
  }
  return counts;
}

}  // namespace

std::size_t multiplicative_order(std::int64_t a, std::int64_t m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "order needs a modulus of at least 2");
  const std::int64_t base = floor_mod(a, m);
  if (std::gcd(base, m) != 1) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(a) + " is not invertible mod " + std::to_string(m));
  }
  std::size_t k = 1;
  for (std::int64_t power = base; power != 1; power = power * base % m) ++k;
  return k;
}

ApFamilySpec ApFamilySpec::make(int m, int common_difference, int start) {
  check_odd_modulus(m);
  const auto d = static_cast<int>(floor_mod(common_difference, m));
  if (std::gcd(d, m) != 1) {
    throw Error(ErrorCode::InvalidSpec,
                "common difference " + std::to_string(common_difference) + " is not invertible mod " + std::to_string(m));
  }
  std::int64_t two_to_m = 1;
  for (int k = 0; k < m; ++k) two_to_m = two_to_m * 2 % m;

  ApFamilySpec spec;
  spec.m = m;
  spec.common_difference = d;
  spec.start = static_cast<int>(floor_mod(start, m));
  spec.order_factor = multiplicative_order(two_to_m, m);
  spec.period = spec.order_factor * static_cast<std::size_t>(m);
  return spec;
}

ResidueTuple ApFamilySpec::prefix(std::size_t n) const {
  std::vector<Residue> terms(n);
  for (std::size_t j = 0; j < n; ++j) {
    terms[j] = static_cast<Residue>((start + static_cast<std::int64_t>(j % static_cast<std::size_t>(m)) *
                                                 common_difference) % m);
  }
  return ResidueTuple(std::move(terms), m);
}

std::vector<ScanRow> ap_balanced_scan(const ApFamilySpec& spec, std::size_t n_max) {
  check_scan_size(n_max);
  const int m = spec.m;
  const ResidueTuple seed = spec.prefix(n_max);
  // Growing the seed by one term appends one cell to the end of every row;
  // `tail` holds those last cells, top row first.
  std::vector<Residue> tail;
  tail.reserve(n_max);
  MultiplicityTable counts(m);
  std::vector<ScanRow> rows;
  rows.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Residue below = seed[n - 1];
    counts.add(below);
    for (std::size_t t = 0; t < tail.size(); ++t) {
      const Residue next = (tail[t] + below) % m;
      tail[t] = below;
      below = next;
      counts.add(below);
    }
    tail.push_back(below);
    const std::size_t spread = counts.spread();
    rows.push_back({n, spread <= 1, spread, spec.claimed(n)});
  }
  return rows;
}

bool orbit_period_check_mod_m(const ResidueTuple& x, std::size_t q) {
  if (x.size() != q) {
    throw Error(ErrorCode::InvalidArgument,
                "tuple length " + std::to_string(x.size()) + " differs from candidate period " + std::to_string(q));
  }
  if (q == 0) throw Error(ErrorCode::EmptyTuple, "candidate period must be positive");
  return orbit_row(x, q) == x;
}

Residue interlaced_term(std::int64_t index, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  const std::int64_t j = (index - floor_mod(index, 3)) / 3;
  switch (floor_mod(index, 3)) {
    case 0:
      return static_cast<Residue>(floor_mod(j, m));
    case 1:
      return static_cast<Residue>(floor_mod(-1 - 2 * j, m));
    default:
      return static_cast<Residue>(floor_mod(1 + j, m));
  }
}

ResidueTuple interlaced_period(int m) {
  check_odd_modulus(m);
  std::vector<Residue> terms(3 * static_cast<std::size_t>(m));
  for (std::size_t k = 0; k < terms.size(); ++k) terms[k] = interlaced_term(static_cast<std::int64_t>(k), m);
  return ResidueTuple(std::move(terms), m);
}

bool interlaced_claimed(int m, std::size_t n, Orientation kind) noexcept {
  const auto mu = static_cast<std::size_t>(m);
  if (n == 0 || m <= 0) return false;
  if (kind == Orientation::Steinhaus) return n % mu == 0 || (n + 1) % (3 * mu) == 0;
  return n % (3 * mu) == 0;
}

InterlacedCheck interlaced_sequence_check(int m, std::size_t n, Orientation kind) {
  check_odd_modulus(m);
  check_scan_size(n);
  const std::vector<ResidueTuple> rows = interlaced_rows(m);

  InterlacedCheck check;
  check.m = m;
  check.n = n;
  check.kind = kind;
  check.claimed = interlaced_claimed(m, n, kind);
  const std::size_t origin_spread = count_at(rows, m, 0, 0, n, kind).spread();
  check.at_origin = {origin_spread <= 1, origin_spread};

  const auto height = static_cast<std::int64_t>(6 * m);
  const auto width = static_cast<std::int64_t>(3 * m);
  check.best_spread = origin_spread;
  for (std::int64_t i0 = 0; i0 < height && !check.witness; ++i0) {
    for (std::int64_t j0 = 0; j0 < width; ++j0) {
      const std::size_t spread = count_at(rows, m, i0, j0, n, kind).spread();
      check.best_spread = std::min(check.best_spread, spread);
      if (spread <= 1) {
        check.witness = std::pair{i0, j0};
        break;
      }
    }
  }
  return check;
}

std::vector<InterlacedCheck> interlaced_scan(int m, std::size_t n_max, Orientation kind) {
  check_odd_modulus(m);
  check_scan_size(n_max);
  std::vector<InterlacedCheck> checks;
  checks.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) checks.push_back(interlaced_sequence_check(m, n, kind));
  return checks;
}

}  // namespace steinhaus
